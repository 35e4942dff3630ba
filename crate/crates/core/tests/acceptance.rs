//! Acceptance criteria, run as a plain binary so that every criterion prints
//! its line. Exits nonzero when any criterion fails or exceeds its budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qchar_core::characters::CharacterCache;
use qchar_core::verify::{
    admissible_grid, check_alternant_lemmas, check_class_one, check_difference_equation, check_dual_qsystem,
    check_eigen, check_macdonald, check_sl2_recursion, check_sl3_g_table, check_sl3_level2_g_grid, check_torus,
    check_whittaker_toda, nvector_grid, run_suite, CheckReport, OperatorForm, SuiteOptions, TorusBounds,
};

type Outcome = qchar_core::Result<Vec<CheckReport>>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn sl3_g_table() -> Outcome {
    Ok(vec![check_sl3_g_table(&CharacterCache::new(2))?])
}

fn sl2_recursion() -> Outcome {
    Ok(vec![check_sl2_recursion(10)?])
}

fn sl3_level_two() -> Outcome {
    Ok(vec![check_sl3_level2_g_grid(&CharacterCache::new(2), 2)?])
}

fn dual_qsystem() -> Outcome {
    let mut out = Vec::new();
    for r in 2..=3 {
        let cache = CharacterCache::new(r);
        for form in [OperatorForm::D, OperatorForm::M] {
            out.push(check_dual_qsystem(cache.engine(), (-1, 2), 6, form));
        }
    }
    Ok(out)
}

fn difference_equation() -> Outcome {
    let mut out = Vec::new();
    for r in 1..=3 {
        let cache = CharacterCache::new(r);
        for k in 2..=3 {
            out.push(check_difference_equation(&cache, k, &admissible_grid(r, k, 5))?);
        }
    }
    Ok(out)
}

fn eigen() -> Outcome {
    (1..=3).map(|r| check_eigen(&CharacterCache::new(r), &nvector_grid(r, 1, 4))).collect()
}

fn macdonald() -> Outcome {
    Ok(vec![check_macdonald(4, 3)?])
}

fn lemmas() -> Outcome {
    check_alternant_lemmas(3)
}

fn whittaker() -> Outcome {
    Ok(vec![check_whittaker_toda(6, 20), check_class_one(4, 20)?])
}

fn torus() -> Outcome {
    Ok((1..=3).flat_map(|r| check_torus(r, &TorusBounds::for_rank(r))).collect())
}

fn properties() -> Outcome {
    run_suite("limits", &SuiteOptions::default())
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, title: "tabulated sl3 level-one G values", budget: Duration::from_secs(1), run: sl3_g_table },
    Criterion { id: 2, title: "sl2 level-one recursion, n <= 10", budget: Duration::from_secs(1), run: sl2_recursion },
    Criterion { id: 3, title: "sl3 level-two G relations", budget: Duration::from_secs(30), run: sl3_level_two },
    Criterion {
        id: 4,
        title: "dual quantum Q-system, D and M forms",
        budget: Duration::from_secs(120),
        run: dual_qsystem,
    },
    Criterion {
        id: 5,
        title: "difference equation, k = 2, 3",
        budget: Duration::from_secs(120),
        run: difference_equation,
    },
    Criterion { id: 6, title: "eigenvalue equation", budget: Duration::from_secs(60), run: eigen },
    Criterion { id: 7, title: "Macdonald specialization oracle", budget: Duration::from_secs(120), run: macdonald },
    Criterion { id: 8, title: "splitting and vanishing lemmas", budget: Duration::from_secs(60), run: lemmas },
    Criterion { id: 9, title: "Whittaker series", budget: Duration::from_secs(30), run: whittaker },
    Criterion { id: 10, title: "quantum torus", budget: Duration::from_secs(120), run: torus },
    Criterion { id: 11, title: "character properties", budget: Duration::from_secs(120), run: properties },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(reports) => {
                let points: usize = reports.iter().map(|r| r.points.len()).sum();
                let bad = reports.iter().find(|r| !r.passed());
                let detail = match bad {
                    Some(r) => format!("{}", r),
                    None => format!("{} checks, {} points", reports.len(), points),
                };
                (bad.is_none() && !reports.is_empty(), detail)
            }
            Err(e) => (false, format!("error: {}", e)),
        };
        let in_budget = elapsed <= c.budget;
        let pass = ok && in_budget;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {} ({:.2?} of {:?}{}) {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.budget,
            if in_budget { "" } else { ", over budget" },
            detail
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
