use qsv_core::ncalg::*;
use qsv_core::qcalc::*;

fn main() {
    for (calc, side) in [
        (Calculus::Unhatted, Side::Left),
        (Calculus::Hatted, Side::Left),
        (Calculus::Hatted, Side::Right),
        (Calculus::Unhatted, Side::Right),
    ] {
        for idx in EIdx::ALL {
            let got = act_on_p2(Space::Euclid3, calc, side, Some(idx));
            println!("{calc:?} {side:?} {idx:?}: {got}");
        }
        println!();
    }
}
