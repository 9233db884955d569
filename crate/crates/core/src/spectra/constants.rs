use dashu::integer::{IBig, UBig};

use crate::cf::{rational_to_decimal, QuadraticSurd};
use crate::markov::ZAGIER_C;

#[derive(Clone, Debug)]
pub struct NamedConstants {
    /// Freiman's constant, the left end of the Hall ray.
    pub freiman: QuadraticSurd,
    pub sqrt12: QuadraticSurd,
    pub sqrt13: QuadraticSurd,
    /// `(9√3 + 65)/22`, the next spectrum point after `√13`.
    pub perron: QuadraticSurd,
    pub zagier: f64,
}

fn surd(a: i64, b: i64, d: u64, r: i64) -> QuadraticSurd {
    QuadraticSurd::new(IBig::from(a), IBig::from(b), UBig::from(d), IBig::from(r)).expect("valid constant")
}

pub fn constants() -> NamedConstants {
    // (2221564096 + 283748√462) / 491993569; the variant with 283798 in
    // front of the root evaluates to 4.5278317… and misses the known digits
    let den = 491_993_569i64;
    NamedConstants {
        freiman: surd(4 * den + 253_589_820, 283_748, 462, den),
        sqrt12: QuadraticSurd::sqrt(UBig::from(12u8)),
        sqrt13: QuadraticSurd::sqrt(UBig::from(13u8)),
        perron: surd(65, 9, 3, 22),
        zagier: ZAGIER_C,
    }
}

impl NamedConstants {
    /// `(name, expression, decimal)` rows, decimals to `digits` significant
    /// digits from a 256-bit enclosure.
    pub fn rows(&self, digits: usize) -> Vec<(&'static str, String, String)> {
        let dec = |s: &QuadraticSurd| rational_to_decimal(&s.enclosure(256).midpoint(), digits);
        vec![
            (
                "c_F",
                "4+(253589820+283748*sqrt(462))/491993569".into(),
                dec(&self.freiman),
            ),
            ("sqrt12", "sqrt(12)".into(), dec(&self.sqrt12)),
            ("sqrt13", "sqrt(13)".into(), dec(&self.sqrt13)),
            ("perron", "(9*sqrt(3)+65)/22".into(), dec(&self.perron)),
            ("zagier_c", "c".into(), format!("{}", self.zagier)),
        ]
    }
}
