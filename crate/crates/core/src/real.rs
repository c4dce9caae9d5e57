//! Extended-precision reals with a thread-local working precision.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub const DEFAULT_PRECISION: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static PREC: Cell<usize> = const { Cell::new(DEFAULT_PRECISION) };
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

/// Mantissa bits used by arithmetic on this thread.
pub fn precision() -> usize {
    PREC.with(Cell::get)
}

/// Runs `f` with the working precision set to `bits`.
pub fn with_precision<T>(bits: usize, f: impl FnOnce() -> T) -> T {
    let old = PREC.with(|p| p.replace(bits));
    struct Restore(usize);
    impl Drop for Restore {
        fn drop(&mut self) {
            PREC.with(|p| p.set(self.0));
        }
    }
    let _restore = Restore(old);
    f()
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct Real(BigFloat);

impl Real {
    pub fn from_i64(v: i64) -> Real {
        Real(BigFloat::from_i64(v, precision()))
    }

    pub fn from_f64(v: f64) -> Real {
        Real(BigFloat::from_f64(v, precision()))
    }

    pub fn zero() -> Real {
        Real::from_i64(0)
    }

    pub fn one() -> Real {
        Real::from_i64(1)
    }

    /// `2^e`, exact.
    pub fn pow2(e: i32) -> Real {
        let mut x = BigFloat::from_i64(1, precision());
        let exp = x.exponent().unwrap_or(1);
        x.set_exponent(exp + e);
        Real(x)
    }

    pub fn pi() -> Real {
        Real(with_cc(|cc| cc.pi(precision(), RM)))
    }

    pub fn sqrt(&self) -> Real {
        Real(self.0.sqrt(precision(), RM))
    }

    pub fn sin(&self) -> Real {
        Real(with_cc(|cc| self.0.sin(precision(), RM, cc)))
    }

    pub fn cos(&self) -> Real {
        Real(with_cc(|cc| self.0.cos(precision(), RM, cc)))
    }

    /// Angle of `(x, y)` in `(-pi, pi]`.
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let zero = Real::zero();
        if x.is_zero() {
            let half = Real::pi() / Real::from_i64(2);
            return if *y < zero { -half } else { half };
        }
        let a = Real(with_cc(|cc| (y / x).0.atan(precision(), RM, cc)));
        if *x > zero {
            a
        } else if *y < zero {
            a - Real::pi()
        } else {
            a + Real::pi()
        }
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn max(self, o: Real) -> Real {
        if o > self {
            o
        } else {
            self
        }
    }

    pub fn min(self, o: Real) -> Real {
        if o < self {
            o
        } else {
            self
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_zero() {
            return 0.0;
        }
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    pub fn parse(s: &str) -> Option<Real> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        let v = with_cc(|cc| BigFloat::parse(s, Radix::Dec, precision(), RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Real(v))
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        let s = with_cc(|cc| self.0.format(Radix::Dec, RM, cc)).map_err(|_| fmt::Error)?;
        f.write_str(&s.replace(".e", ".0e"))
    }
}

impl PartialEq for Real {
    fn eq(&self, o: &Real) -> bool {
        self.0.cmp(&o.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Real) -> Option<Ordering> {
        self.0.cmp(&o.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                Real(self.0.$m(&o.0, precision(), RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                (&self).$m(&o)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                (&self).$m(o)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let two = Real::from_i64(2);
        let r = two.sqrt();
        assert!((&r * &r - &two).abs() < Real::pow2(-250));
        assert_eq!(Real::pow2(-3), Real::from_f64(0.125));
        assert!((Real::from_i64(1) / Real::from_i64(3)).to_f64() - 1.0 / 3.0 < 1e-15);
    }

    #[test]
    fn trig() {
        let pi = Real::pi();
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let s = (pi.clone() / Real::from_i64(6)).sin();
        assert!((s - Real::from_f64(0.5)).abs() < Real::pow2(-240));
        let one = Real::one();
        let a = Real::atan2(&-&one, &-&one);
        assert!((a.to_f64() + 3.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!(
            (Real::atan2(&one, &Real::zero()).to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15
        );
    }

    #[test]
    fn decimal_round_trip() {
        let x = Real::from_i64(2).sqrt() / Real::from_i64(7);
        let y = Real::parse(&x.to_string()).unwrap();
        assert!((x - y).abs() < Real::pow2(-245));
        assert_eq!(
            Real::parse(&Real::from_i64(-3).to_string()).unwrap(),
            Real::from_i64(-3)
        );
        assert!(Real::parse("abc").is_none());
    }

    #[test]
    fn precision_is_scoped() {
        assert_eq!(precision(), DEFAULT_PRECISION);
        with_precision(512, || assert_eq!(precision(), 512));
        assert_eq!(precision(), DEFAULT_PRECISION);
    }
}
