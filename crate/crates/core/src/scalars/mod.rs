//! Exact coefficient fields: the rationals and F_p(t).
//!
//! A [`Scalar`] carries its backend tag. Mixing backends is a programming
//! error for the operator impls (they panic) and an explicit
//! [`ScalarError`] for the checked API used at the boundary.

mod parse;
pub mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::parse_scalar;
pub use ratfunc::{Poly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedBackends,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q{0} is zero")]
    ZeroParameter(usize),
    #[error("q0*q1*q2*q3 = {0} is a root of unity")]
    RootOfUnity(String),
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("missing second operand")]
    MissingOperand,
}

/// Which field the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    /// F_p(t) for a prime `p`.
    RationalFunction {
        p: u64,
    },
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::RationalFunction { .. } => "ratfunc",
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Backend::Rational => None,
            Backend::RationalFunction { p } => Some(*p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    RatFunc(RatFunc),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Checked arithmetic entry point. Unary ops ignore `b`.
pub fn arith(a: &Scalar, b: Option<&Scalar>, op: ArithOp) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.checked_inv(),
        _ => {
            let b = b.ok_or(ScalarError::MissingOperand)?;
            match op {
                ArithOp::Add => a.checked_add(b),
                ArithOp::Sub => a.checked_sub(b),
                ArithOp::Mul => a.checked_mul(b),
                ArithOp::Div => a.checked_div(b),
                ArithOp::Neg | ArithOp::Inv => unreachable!(),
            }
        }
    }
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::RatFunc(r) => Backend::RationalFunction { p: r.modulus() },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::RatFunc(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::RatFunc(r) => r.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        Scalar::from_int(self.backend(), 0)
    }

    pub fn one_like(&self) -> Scalar {
        Scalar::from_int(self.backend(), 1)
    }

    pub fn from_int(backend: Backend, n: i64) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Backend::RationalFunction { p } => Scalar::RatFunc(RatFunc::from_int(p, n)),
        }
    }

    /// The indeterminate `t`; `None` over the rationals.
    pub fn indeterminate(backend: Backend) -> Option<Scalar> {
        match backend {
            Backend::Rational => None,
            Backend::RationalFunction { p } => {
                Some(Scalar::RatFunc(RatFunc::from_poly(Poly::var(p))))
            }
        }
    }

    /// Re-normalizes; values are always kept canonical so this is the identity
    /// up to representation.
    pub fn normalized(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.reduced()),
            Scalar::RatFunc(r) => {
                Scalar::RatFunc(RatFunc::new(r.numer().clone(), r.denom().clone()))
            }
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::RatFunc(a.add(b)))
            }
            _ => Err(ScalarError::MixedBackends),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::RatFunc(a.mul(b)))
            }
            _ => Err(ScalarError::MixedBackends),
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::RatFunc(r) => Scalar::RatFunc(r.inv()),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if self.backend() != other.backend() {
            return Err(ScalarError::MixedBackends);
        }
        self.checked_mul(&other.checked_inv()?)
    }

    /// Panics on zero.
    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Whether `s^k = 1` for some `k >= 1`.
    ///
    /// Over Q only ±1 qualify. In F_p(t) every nonzero constant lies in the
    /// finite multiplicative group F_p^× and no non-constant function has
    /// finite order.
    pub fn is_root_of_unity(&self) -> Result<bool, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => r.is_integer() && r.numer().abs().is_one(),
            Scalar::RatFunc(r) => r.is_nonzero_constant(),
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::RatFunc(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::RatFunc(r) => Scalar::RatFunc(r.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field together with the parameters q0..q3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    backend: Backend,
    q: [Scalar; 4],
}

impl FieldSpec {
    /// Validates nonzero parameters, a prime characteristic and that
    /// q0*q1*q2*q3 is not a root of unity.
    pub fn new(backend: Backend, q: [Scalar; 4]) -> Result<Self, ScalarError> {
        if let Backend::RationalFunction { p } = backend {
            if !is_prime(p) {
                return Err(ScalarError::NotPrime(p));
            }
        }
        for (idx, qi) in q.iter().enumerate() {
            if qi.backend() != backend {
                return Err(ScalarError::MixedBackends);
            }
            if qi.is_zero() {
                return Err(ScalarError::ZeroParameter(idx));
            }
        }
        let spec = FieldSpec { backend, q };
        let product = spec.s_product(4, 0);
        if product.is_root_of_unity()? {
            return Err(ScalarError::RootOfUnity(product.to_string()));
        }
        Ok(spec)
    }

    /// Parses each q_i with [`parse_scalar`] and validates.
    pub fn parse(backend: Backend, q: &[&str]) -> Result<Self, ScalarError> {
        if q.len() != 4 {
            return Err(ScalarError::Parse {
                input: q.join(","),
                reason: format!("expected 4 parameters, got {}", q.len()),
            });
        }
        if let Backend::RationalFunction { p } = backend {
            if !is_prime(p) {
                return Err(ScalarError::NotPrime(p));
            }
        }
        let parsed = q
            .iter()
            .map(|s| parse_scalar(s, backend))
            .collect::<Result<Vec<_>, _>>()?;
        let q: [Scalar; 4] = parsed.try_into().expect("length checked");
        FieldSpec::new(backend, q)
    }

    pub fn rational(q: [i64; 4]) -> Result<Self, ScalarError> {
        FieldSpec::new(
            Backend::Rational,
            q.map(|v| Scalar::from_int(Backend::Rational, v)),
        )
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// q_i with the index read mod 4.
    pub fn q(&self, i: i64) -> &Scalar {
        &self.q[i.rem_euclid(4) as usize]
    }

    pub fn params(&self) -> &[Scalar; 4] {
        &self.q
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_int(self.backend, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_int(self.backend, 1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar::from_int(self.backend, n)
    }

    /// S_{u,v} = q_v q_{v+1} ... q_{v+u-1}, indices mod 4; S_{0,v} = 1.
    pub fn s_product(&self, u: u32, v: i64) -> Scalar {
        (0..u as i64).fold(self.one(), |acc, t| &acc * self.q(v + t))
    }

    /// Whether the characteristic divides `n` (never in characteristic 0).
    pub fn char_divides(&self, n: u64) -> bool {
        match self.backend {
            Backend::Rational => false,
            Backend::RationalFunction { p } => n.is_multiple_of(p),
        }
    }
}

/// Free-function form of [`FieldSpec::s_product`].
pub fn s_product(u: u32, v: i64, spec: &FieldSpec) -> Scalar {
    spec.s_product(u, v)
}

pub fn char_divides(spec: &FieldSpec, n: u64) -> bool {
    spec.char_divides(n)
}
