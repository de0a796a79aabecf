//! Every coefficient polynomial of the families, transcribed once.
//!
//! Each entry is a rational function of the family parameter (called `t`
//! for the isogeny models and `u` for the final families). The checksum
//! tests at the bottom pin the transcriptions against independently
//! expanded values.

use crate::exact::RatFunc;
use crate::scalar::Scalar;
use crate::RationalPoly;

/// A polynomial in the parameter, leading coefficient first.
pub(crate) fn p(desc: &[i64]) -> RatFunc {
    RatFunc::poly(RationalPoly::from_desc(desc))
}

pub(crate) fn c(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

pub(crate) fn var() -> RatFunc {
    RatFunc::var()
}

/// Coefficients of a cubic `a₃x³ + a₂x² + a₁x + a₀`, constant term first.
pub(crate) type Cubic = [RatFunc; 4];

/// ℤ/13: the 13-isogeny model, the twist, and the final family.
pub(crate) mod thirteen {
    use super::*;

    fn t2p1() -> RatFunc {
        p(&[1, 0, 1])
    }

    pub(crate) fn p4() -> RatFunc {
        p(&[1, -1, 5, 1, 1])
    }

    fn p8() -> RatFunc {
        p(&[1, -5, 7, -5, 0, 5, 7, 5, 1])
    }

    fn p12() -> RatFunc {
        p(&[1, -8, 25, -44, 40, 18, -40, -18, 40, 44, 25, 8, 1])
    }

    fn q8() -> RatFunc {
        p(&[1, -5, 15, -29, 16, -3, -9, -3, 1])
    }

    fn q9() -> RatFunc {
        p(&[3, -12, 24, -42, 15, -33, -12, -6, -6, -3])
    }

    /// `A₁₃(t, U) = f(t)U²`.
    pub(crate) fn a13() -> RatFunc {
        c(-27) * p4() * t2p1().pow(2) * p8()
    }

    /// `B₁₃(t, U) = g(t)U³`.
    pub(crate) fn b13() -> RatFunc {
        c(-54) * p4() * t2p1().pow(4) * p12()
    }

    /// The cubic `a_i(t, U) = cubic[i]·U^(3-i)`.
    pub(crate) fn isogeny_cubic() -> Cubic {
        let t = var();
        [
            c(27) * t2p1().pow(3) * p4() * p(&[1, -8, 38, -124, 245, -326, 228, 120, 12, 38, -43, -80, -34, -4, 1]),
            c(27) * t.pow(4) * t2p1().pow(2) * p4() * q8(),
            c(9) * t.pow(8) * p(&[1, -1]).pow(2) * t2p1() * p4(),
            t.pow(12),
        ]
    }

    /// `U(t)`.
    pub(crate) fn twist() -> RatFunc {
        c(-1) / (t2p1() * p4())
    }

    /// Coordinates `(a₀, a₁, a₂)` of `β_t²` in the basis `1, α_t, α_t²`.
    pub(crate) fn beta_squared() -> [RatFunc; 3] {
        let t = var();
        let common = c(-9) * t2p1() * p4() / t.pow(12);
        let t5t4 = p(&[1, -1, 0, 0, 0, 0]);
        [common.clone() * q9().pow(2), common.clone() * c(2) * q9() * t5t4.clone(), common * t5t4.pow(2)]
    }

    /// `(b₀, b₁)` with `U·β_t² = (b₁α_t + b₀)²`.
    pub(crate) fn beta_root() -> [RatFunc; 2] {
        let t = var();
        [c(9) * t2p1() * p(&[1, -4, 7, -10, -2, -1, -2, -1]) / t.pow(6), c(3) * p(&[1, -1]) / t.pow(2)]
    }

    /// Final family: `(A(u), B(u))`.
    pub(crate) fn family() -> [RatFunc; 2] {
        [c(-27) * p8() / p4(), c(54) * t2p1() * p12() / p4().pow(2)]
    }

    pub(crate) fn family_cubic() -> Cubic {
        let u = var();
        [
            p(&[-27, 216, -1026, 3348, -6615, 8802, -6156, -3240, -324, -1026, 1161, 2160, 918, 108, -27]),
            c(27) * u.pow(4) * p4() * q8(),
            c(-9) * u.pow(8) * p(&[1, -1]).pow(2) * p4().pow(2),
            u.pow(12) * p4().pow(2),
        ]
    }
}

/// ℤ/14 with a rational 7-torsion point (Kubert).
pub(crate) mod kubert7 {
    use super::*;

    pub(crate) fn delta_cubic() -> RatFunc {
        p(&[1, -8, 5, 1])
    }

    /// Long model `[a1, a2, a3, a4, a6]`.
    pub(crate) fn long() -> [RatFunc; 5] {
        let b = p(&[1, -1, 0, 0]);
        [-p(&[1, -1, -1]), -b.clone(), -b, c(0), c(0)]
    }

    pub(crate) fn discriminant() -> RatFunc {
        let u = var();
        u.pow(7) * p(&[1, -1]).pow(7) * delta_cubic()
    }

    /// `f_u(x) = x³ + A x + B`: `(A, B)`.
    pub(crate) fn short() -> [RatFunc; 2] {
        [
            RatFunc::from_rational(&crate::exact::rat(-1, 3)) * p(&[1, -1, 1]) * p(&[1, -11, 30, -15, -10, 5, 1]),
            RatFunc::from_rational(&crate::exact::rat(2, 27))
                * p(&[1, -18, 117, -354, 570, -486, 273, -222, 174, -46, -15, 6, 1]),
        ]
    }
}

/// ℤ/18 with a rational 9-torsion point (Kubert).
pub(crate) mod kubert9 {
    use super::*;

    pub(crate) fn delta_cubic() -> RatFunc {
        p(&[1, -6, 3, 1])
    }

    pub(crate) fn long() -> [RatFunc; 5] {
        let u = var();
        let b = u.pow(2) * p(&[1, -1]) * p(&[1, -1, 1]);
        [-p(&[1, -1, 0, -1]), -b.clone(), -b, c(0), c(0)]
    }

    pub(crate) fn discriminant() -> RatFunc {
        let u = var();
        u.pow(9) * p(&[1, -1]).pow(9) * p(&[1, -1, 1]).pow(3) * delta_cubic()
    }

    pub(crate) fn short() -> [RatFunc; 2] {
        [
            RatFunc::from_rational(&crate::exact::rat(-1, 3))
                * p(&[1, -3, 0, 1])
                * p(&[1, -9, 27, -48, 54, -45, 27, -9, 0, 1]),
            RatFunc::from_rational(&crate::exact::rat(2, 27))
                * p(&[
                    1, -18, 135, -570, 1557, -2970, 4128, -4230, 3240, -2032, 1359, -1080, 735, -306, 27, 42, -18, 0, 1,
                ]),
        ]
    }
}

/// ℤ/18 over cyclic fields: the 9-isogeny model and its specialisations.
pub(crate) mod nine {
    use super::*;

    /// `A₉(t, U) = f(t)U²`.
    pub(crate) fn a9() -> RatFunc {
        c(-2187) * p(&[1, 1]).pow(3) * p(&[9, 27, 27, 1])
    }

    /// `B₉(t, U) = g(t)U³`.
    pub(crate) fn b9() -> RatFunc {
        c(-39366) * p(&[1, 1]).pow(3) * p(&[27, 162, 405, 504, 297, 54, -1])
    }

    /// The x-coordinate of the rational 3-torsion of `E_{t,1}`.
    pub(crate) fn three_torsion_x() -> RatFunc {
        -p(&[81, 243, 243, 81])
    }

    /// `(A(s), B(s))` of the model with a rational 3-torsion point.
    pub(crate) fn with_three_torsion() -> [RatFunc; 2] {
        [c(-3) * p(&[1, 1]) * p(&[9, 27, 27, 1]), c(2) * p(&[27, 162, 405, 504, 297, 54, -1])]
    }

    /// `F_s(x)`, a cubic factor of the 9-division polynomial.
    pub(crate) fn cubic_factor() -> Cubic {
        [p(&[-27, -270, -1053, -2196, -2565, -1566, -323]), p(&[27, 180, 450, 516, 219]), p(&[-9, -30, -33]), c(1)]
    }

    /// `2¹²·3⁴·(s² + 3s + 3)²`.
    pub(crate) fn cubic_factor_discriminant() -> RatFunc {
        c(4096 * 81) * p(&[1, 3, 3]).pow(2)
    }

    /// `s(u) = (u³ - 3u²)/(3u - 3)`.
    pub(crate) fn substitution() -> RatFunc {
        p(&[1, -3, 0, 0]) / p(&[3, -3])
    }

    pub(crate) fn family() -> [RatFunc; 2] {
        [
            c(-27) * p(&[1, -3, 3, -3]) * p(&[1, -9, 36, -90, 162, -216, 192, -90, 9, -3]),
            c(54)
                * p(&[1, -6, 15, -24, 27, -18, -3])
                * p(&[1, -12, 66, -228, 567, -1080, 1596, -1800, 1503, -900, 378, -108, 9]),
        ]
    }

    pub(crate) fn family_cubic() -> Cubic {
        let um1 = p(&[1, -1]);
        [
            p(&[
                -1, 18, -165, 1020, -4716, 17172, -50904, 125820, -263358, 470376, -718146, 934740, -1028268, 939276,
                -693360, 399924, -173097, 52326, -8721,
            ]),
            c(9) * um1.pow(2) * p(&[1, -3, 3, -3]) * p(&[1, -9, 44, -146, 354, -648, 912, -954, 657, -219]),
            c(-27) * um1.pow(4) * p(&[1, -6, 19, -40, 63, -66, 33]),
            c(27) * um1.pow(6),
        ]
    }
}

/// ℤ/2 × ℤ/14 over cyclic fields.
pub(crate) mod two_fourteen {
    use super::*;

    pub(crate) fn p6() -> RatFunc {
        p(&[1, 4, 13, -40, 19, 36, 31])
    }

    fn u2p3() -> RatFunc {
        p(&[1, 0, 3])
    }

    /// `(u - 1)(u + 1)`.
    fn um1up1() -> RatFunc {
        p(&[1, 0, -1])
    }

    /// Long model `y² + xy = x³ + A₂x² + A₄x + A₆`: `[a1, a2, a3, a4, a6]`.
    pub(crate) fn long() -> [RatFunc; 5] {
        [
            c(1),
            c(-4) * p(&[1, 2, 15, -20, 15, 18, 33]) * um1up1().pow(2) / (u2p3().pow(3) * p6()),
            c(0),
            c(64) * p(&[1, 2, 3, -20, 39, 18, 21]) * um1up1().pow(6) / (u2p3().pow(6) * p6().pow(2)),
            c(4096) * um1up1().pow(12) / (p6().pow(3) * u2p3().pow(9)),
        ]
    }

    pub(crate) fn short() -> [RatFunc; 2] {
        [
            -p(&[1, 4, -10, -68, 3, 552, 4, -2568, 2103, 1684, 1958, 396, 37]) / (c(48) * u2p3().pow(3) * p6()),
            p(&[
                1, 8, 12, -120, -518, 504, 5068, 568, -24009, -15024, 62936, 183120, -550452, -851984, 4384056,
                -3808912, 1467519, -4083672, 3590300, 5512360, 6945498, 2943128, 893052, 120024, 3753,
            ]) / (c(864) * u2p3().pow(6) * p6().pow(2)),
        ]
    }

    /// `f(x, t)`.
    pub(crate) fn defining() -> Cubic {
        [p(&[-1, -2, 9, 2]), c(-9) * um1up1(), p(&[1, 2, -9, -2]), um1up1()]
    }

    /// `t³ + t² - 9t - 1`.
    fn d3() -> RatFunc {
        p(&[1, 1, -9, -1])
    }

    /// The printed 7-torsion point on `E_t`: coordinates of `x₁` and `y₁`
    /// in the basis `1, α_t, α_t²`.
    pub(crate) fn seven_torsion() -> [[RatFunc; 3]; 2] {
        let tm1 = p(&[1, -1]);
        let tp1 = p(&[1, 1]);
        let dx = c(6144) * tm1.pow(2) * d3().pow(2);
        let x = [
            p(&[
                1, 13, 63, 69, -549, -1919, 1227, 15593, 13329, -49369, -81699, 79599, 234489, -166773, -202663, 90019,
                134106,
            ]) / dx.clone(),
            -(tp1.pow(2)
                * p(&[1, 6, 7, -84, -271, 330, 2879, 168, -12821, -9926, 19677, 96236, -174941, 68918, 26205]))
                / dx.clone(),
            -(tm1.clone() * tp1.pow(3) * p(&[1, 5, 7, -53, -150, 178, 1422, -906, -379, -10823, 22651, -14001])) / dx,
        ];
        let dy = c(256) * tm1.clone() * d3().pow(3);
        let y = [
            tp1.pow(2)
                * p(&[1, 11, 40, -14, -497, -847, 2218, 6764, -4225, -23171, -2172, 43778, 14481, -26521, -26230])
                / dy.clone(),
            -(tp1.pow(2) * p(&[1, 6, 7, -76, -263, 226, 2135, 760, -7621, -9622, 19213, 18452, -8501, -26130, -4971]))
                / dy.clone(),
            -(tm1 * tp1.pow(3) * p(&[1, 5, 7, -45, -150, 114, 782, 390, -2427, -1223, 1787, 2807])) / dy,
        ];
        [x, y]
    }

    /// The change of variables `x ↦ p²x + r`, `y ↦ p³y + p²qx + s` carrying
    /// `E_t` to the long model: `p` in the basis `1, α_t, α_t²`, then `q, r, s`.
    pub(crate) fn change() -> ([RatFunc; 3], [RatFunc; 3]) {
        let tm1 = p(&[1, -1]);
        let tp1 = p(&[1, 1]);
        let dp = c(2) * u2p3() * p6();
        let pc = [
            tp1.clone() * p(&[1, -2, 1, -58, 259, -318, -5, -6]) / dp.clone(),
            p(&[1, 4, -4, -60, -42, 492, -228, -308, -111]) / dp.clone(),
            tm1 * tp1 * p(&[1, 1, -6, -46, 53, 29]) / dp,
        ];
        let r12 = p(&[1, 4, 6, -36, -45, 168, 804, -1608, 855, 788, 2166, 684, 309]);
        let den = u2p3().pow(2) * p(&[1, 4, 16, -28, 58, -84, 88, 108, 93]);
        let q = RatFunc::from_rational(&crate::exact::rat(-1, 2));
        let r = -r12.clone() / (c(12) * den.clone());
        let s = r12 / (c(24) * den);
        (pc, [q, r, s])
    }
}
