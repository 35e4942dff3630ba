//! Exact scalar rings and polynomial arithmetic.

mod cartan;
mod coeff;
mod frac;
mod laurent1;
mod multi;
mod sym;
mod upoly;

pub use cartan::CartanData;
pub use coeff::{Coeff, GcdDomain};
pub use frac::{Frac, PRational, QRational, QtRational, ZqPoly, ZqtPoly};
pub use laurent1::{PSym, QPoly, QSym, Symbol, TSym, UniLaurent, WPoly, WSym};
pub use multi::{
    alternant_sum, antisymmetrize, constrain, exact_div, q_to_w, symmetric_sum, symmetrize, vandermonde,
    vandermonde_on, w_to_q, Exponent, LaurentPoly,
};
pub use sym::SymPoly;
pub use upoly::UPoly;
