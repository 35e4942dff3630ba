/// The matrix `Lambda` of `sl(r+1)`: the inverse Cartan matrix scaled by
/// `r + 1`, extended by zero to the boundary indices `0` and `r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
}

impl CartanData {
    pub fn new(rank: usize) -> Self {
        CartanData { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `min(a, b) * (r + 1 - max(a, b))`; zero whenever an index is `0` or
    /// `r + 1`.
    pub fn lambda(&self, a: usize, b: usize) -> i64 {
        let n = self.rank as i64 + 1;
        let (lo, hi) = (a.min(b) as i64, a.max(b) as i64);
        if lo <= 0 || hi >= n {
            return 0;
        }
        lo * (n - hi)
    }

    /// `sum_b Lambda_{a,b}` over `b` in `1..=r`.
    pub fn row_sum(&self, a: usize) -> i64 {
        (1..=self.rank).map(|b| self.lambda(a, b)).sum()
    }

    /// The matrix over `1..=r`.
    pub fn matrix(&self) -> alloc::vec::Vec<alloc::vec::Vec<i64>> {
        (1..=self.rank).map(|a| (1..=self.rank).map(|b| self.lambda(a, b)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_cartan_matrix() {
        // Lambda * C = (r + 1) * I for the Cartan matrix C of A_r.
        for r in 1..6usize {
            let l = CartanData::new(r);
            for a in 1..=r {
                for b in 1..=r {
                    let mut s = 0;
                    for g in 1..=r {
                        let c = match (g as i64 - b as i64).abs() {
                            0 => 2,
                            1 => -1,
                            _ => 0,
                        };
                        s += l.lambda(a, g) * c;
                    }
                    assert_eq!(s, if a == b { r as i64 + 1 } else { 0 });
                }
            }
            assert_eq!(l.lambda(0, 1), 0);
            assert_eq!(l.lambda(r + 1, 1), 0);
        }
        assert_eq!(CartanData::new(2).matrix(), alloc::vec![alloc::vec![2, 1], alloc::vec![1, 2]]);
        assert_eq!(CartanData::new(2).row_sum(1), 3);
    }
}
