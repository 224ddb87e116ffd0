//! Derivative actions (left/right, unhatted/hatted) on both spaces and
//! exact linear-operator representations on truncated basis windows.

mod action;
mod operator;

pub use action::{act_on_p2, Calculus, DerivativeAction, EIdx, Side};
pub use operator::{LinearOperator, OperatorMismatch, Window};
