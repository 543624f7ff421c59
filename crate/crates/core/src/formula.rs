//! Free rational formulas.
//!
//! A [`RatFormula`] is a shared DAG built from rational constants, variables,
//! negation, sum, product and inverse. Values come from [`evaluate`] at a
//! point of some [`Ring`]; a formula is undefined at a point exactly when one
//! of its `inv` subterms evaluates to a non-unit.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Codec, Ring};

#[derive(Debug, PartialEq)]
pub enum Node {
    Const(BigRational),
    Var(String),
    Neg(RatFormula),
    Add(RatFormula, RatFormula),
    Mul(RatFormula, RatFormula),
    Inv(RatFormula),
}

#[derive(Clone)]
pub struct RatFormula(Arc<Node>);

/// Values of the variables of a formula.
pub type EvalAssignment<E> = BTreeMap<String, E>;

impl PartialEq for RatFormula {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl RatFormula {
    fn make(n: Node) -> Self {
        RatFormula(Arc::new(n))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn constant(q: BigRational) -> Self {
        Self::make(Node::Const(q))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn var(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty(), "variable names are nonempty");
        Self::make(Node::Var(name))
    }

    pub fn neg(&self) -> Self {
        Self::make(Node::Neg(self.clone()))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::make(Node::Add(self.clone(), o.clone()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::make(Node::Mul(self.clone(), o.clone()))
    }

    pub fn inv(&self) -> Self {
        Self::make(Node::Inv(self.clone()))
    }

    pub fn as_const(&self) -> Option<&BigRational> {
        match self.node() {
            Node::Const(q) => Some(q),
            _ => None,
        }
    }

    pub fn parse(src: &str) -> Result<Self> {
        Parser { src: src.as_bytes(), pos: 0 }.parse_all()
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    fn children(&self) -> Vec<&RatFormula> {
        match self.node() {
            Node::Const(_) | Node::Var(_) => vec![],
            Node::Neg(a) | Node::Inv(a) => vec![a],
            Node::Add(a, b) | Node::Mul(a, b) => vec![a, b],
        }
    }

    /// Free variables.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut visited = std::collections::HashSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if !visited.insert(f.key()) {
                continue;
            }
            if let Node::Var(v) = f.node() {
                seen.insert(v.clone());
            }
            stack.extend(f.children());
        }
        seen
    }

    /// Number of distinct nodes in the DAG.
    pub fn dag_size(&self) -> usize {
        let mut visited = std::collections::HashSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if visited.insert(f.key()) {
                stack.extend(f.children());
            }
        }
        visited.len()
    }

    /// Inversion height: the maximal number of nested `inv` along any path
    /// from the root to a leaf.
    pub fn height(&self) -> usize {
        fn go(f: &RatFormula, memo: &mut HashMap<usize, usize>) -> usize {
            if let Some(&h) = memo.get(&f.key()) {
                return h;
            }
            let below = f.children().into_iter().map(|c| go(c, memo)).max().unwrap_or(0);
            let h = below + usize::from(matches!(f.node(), Node::Inv(_)));
            memo.insert(f.key(), h);
            h
        }
        go(self, &mut HashMap::new())
    }
}

/// Evaluate `f` at the point `sigma` of `ring`.
///
/// Shared subterms are evaluated once. Fails with
/// [`Error::UndefinedInverse`] carrying the offending `inv(b)` when `b`
/// evaluates to a non-unit, and with [`Error::Unbound`] for a missing
/// variable.
pub fn evaluate<R: Ring>(f: &RatFormula, sigma: &EvalAssignment<R::Elem>, ring: &R) -> Result<R::Elem> {
    fn go<R: Ring>(
        f: &RatFormula,
        sigma: &EvalAssignment<R::Elem>,
        ring: &R,
        memo: &mut HashMap<usize, R::Elem>,
    ) -> Result<R::Elem> {
        if let Some(v) = memo.get(&f.key()) {
            return Ok(v.clone());
        }
        let v = match f.node() {
            Node::Const(q) => ring.from_rational(q),
            Node::Var(x) => sigma.get(x).cloned().ok_or_else(|| Error::Unbound(x.clone()))?,
            Node::Neg(a) => ring.neg(&go(a, sigma, ring, memo)?),
            Node::Add(a, b) => {
                let x = go(a, sigma, ring, memo)?;
                ring.add(&x, &go(b, sigma, ring, memo)?)
            }
            Node::Mul(a, b) => {
                let x = go(a, sigma, ring, memo)?;
                ring.mul(&x, &go(b, sigma, ring, memo)?)
            }
            Node::Inv(a) => {
                let x = go(a, sigma, ring, memo)?;
                ring.try_inv(&x).ok_or_else(|| Error::UndefinedInverse(f.clone()))?
            }
        };
        memo.insert(f.key(), v.clone());
        Ok(v)
    }
    go(f, sigma, ring, &mut HashMap::new())
}

/// Formulas as a ring: every operation builds a node, and inversion always
/// succeeds formally. Only folding that cannot change the domain of
/// definition is applied (`x + 0`, `1 * x`, constant arithmetic).
#[derive(Clone, Copy, Debug, Default)]
pub struct FormulaRing;

impl Ring for FormulaRing {
    type Elem = RatFormula;

    fn zero(&self) -> RatFormula {
        RatFormula::int(0)
    }

    fn one(&self) -> RatFormula {
        RatFormula::int(1)
    }

    fn add(&self, a: &RatFormula, b: &RatFormula) -> RatFormula {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => RatFormula::constant(x + y),
            (Some(x), _) if x.is_zero() => b.clone(),
            (_, Some(y)) if y.is_zero() => a.clone(),
            _ => a.add(b),
        }
    }

    fn neg(&self, a: &RatFormula) -> RatFormula {
        match a.as_const() {
            Some(x) => RatFormula::constant(-x),
            None => a.neg(),
        }
    }

    fn mul(&self, a: &RatFormula, b: &RatFormula) -> RatFormula {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => RatFormula::constant(x * y),
            (Some(x), _) if x.is_one() => b.clone(),
            (_, Some(y)) if y.is_one() => a.clone(),
            _ => a.mul(b),
        }
    }

    fn try_inv(&self, a: &RatFormula) -> Option<RatFormula> {
        match a.as_const() {
            Some(x) if !x.is_zero() => Some(RatFormula::constant(x.recip())),
            _ => Some(a.inv()),
        }
    }

    fn from_rational(&self, q: &BigRational) -> RatFormula {
        RatFormula::constant(q.clone())
    }

    /// Only literal zero counts; semantic zero is undecidable here.
    fn is_zero(&self, a: &RatFormula) -> bool {
        a.as_const().is_some_and(Zero::is_zero)
    }
}

impl Codec for FormulaRing {
    fn encode(&self, a: &RatFormula) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }

    fn decode(&self, v: &serde_json::Value) -> Result<RatFormula> {
        let s = v.as_str().ok_or_else(|| Error::invalid(format!("expected a formula string, got {v}")))?;
        RatFormula::parse(s)
    }
}

// Printing. Output reparses to a structurally equal formula.

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_UNARY: u8 = 3;

impl RatFormula {
    fn prec(&self) -> u8 {
        match self.node() {
            Node::Add(..) => PREC_ADD,
            Node::Mul(..) => PREC_MUL,
            Node::Neg(_) => PREC_UNARY,
            Node::Const(q) if q.is_negative() => PREC_UNARY,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self.node() {
            Node::Const(q) => write!(f, "{}", linalg::rational_to_string(q)),
            Node::Var(x) => write!(f, "{x}"),
            Node::Neg(a) => {
                write!(f, "-")?;
                // `-3` would reparse as a negative literal
                if a.as_const().is_some() {
                    write!(f, "(")?;
                    a.write_at(f, 0)?;
                    write!(f, ")")
                } else {
                    a.write_at(f, PREC_UNARY)
                }
            }
            Node::Add(a, b) => {
                a.write_at(f, PREC_ADD)?;
                match b.node() {
                    Node::Neg(c) => {
                        write!(f, " - ")?;
                        if c.as_const().is_some() {
                            write!(f, "(")?;
                            c.write_at(f, 0)?;
                            write!(f, ")")
                        } else {
                            c.write_at(f, PREC_MUL)
                        }
                    }
                    _ => {
                        write!(f, " + ")?;
                        b.write_at(f, PREC_MUL)
                    }
                }
            }
            Node::Mul(a, b) => {
                a.write_at(f, PREC_MUL)?;
                write!(f, "*")?;
                b.write_at(f, PREC_UNARY)
            }
            Node::Inv(a) => {
                write!(f, "inv(")?;
                a.write_at(f, 0)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for RatFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl fmt::Debug for RatFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Parsing.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | atom
//   atom  := INT ('/' INT)? | IDENT | 'inv' '(' expr ')' | '(' expr ')'
//
// `a - b` parses as `a + (-b)`; a `-` directly before a literal is part of it.

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn parse_all(mut self) -> Result<RatFormula> {
        let f = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(f)
    }

    fn expr(&mut self) -> Result<RatFormula> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFormula> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFormula> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let q = self.literal()?;
                return Ok(RatFormula::constant(-q));
            }
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn literal(&mut self) -> Result<BigRational> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from_integer(n))
    }

    fn atom(&mut self) -> Result<RatFormula> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(RatFormula::constant(self.literal()?)),
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                self.expect(b')')?;
                Ok(f)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if name == "inv" && self.peek() == Some(b'(') {
                    self.pos += 1;
                    let f = self.expr()?;
                    self.expect(b')')?;
                    return Ok(f.inv());
                }
                Ok(RatFormula::var(name))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MatRing, QMat, QRing};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_x_minus_x_is_nowhere_defined() {
        let f = RatFormula::parse("inv(x - x)").unwrap();
        let sigma = EvalAssignment::from([("x".to_string(), q(3, 7))]);
        match evaluate(&f, &sigma, &QRing) {
            Err(Error::UndefinedInverse(sub)) => assert_eq!(sub.to_string(), "inv(x - x)"),
            other => panic!("expected a domain error, got {other:?}"),
        }
    }

    #[test]
    fn x_times_inverse_is_one() {
        let ring = MatRing::new(2);
        let f = RatFormula::parse("x*inv(x)").unwrap();
        let sigma = EvalAssignment::from([("x".to_string(), QMat::from_i64(2, &[1, 2, 3, 5]))]);
        assert_eq!(evaluate(&f, &sigma, &ring).unwrap(), ring.one());
    }

    #[test]
    fn double_inverse() {
        let f = RatFormula::parse("inv(inv(x))").unwrap();
        let sigma = EvalAssignment::from([("x".to_string(), q(2, 3))]);
        assert_eq!(evaluate(&f, &sigma, &QRing).unwrap(), q(2, 3));
    }

    #[test]
    fn heights() {
        assert_eq!(RatFormula::var("x").height(), 0);
        assert_eq!(RatFormula::parse("inv(x + inv(y))").unwrap().height(), 2);
        assert_eq!(RatFormula::parse("inv(x) + inv(y)*z").unwrap().height(), 1);
    }

    #[test]
    fn unbound_variable() {
        let f = RatFormula::parse("x + y").unwrap();
        let sigma = EvalAssignment::from([("x".to_string(), q(1, 1))]);
        assert!(matches!(evaluate(&f, &sigma, &QRing), Err(Error::Unbound(v)) if v == "y"));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "a*b + c",
            "a*(b + c)",
            "-a*b",
            "-(a*b)",
            "a - b*c",
            "a - (b + c)",
            "inv(x + -3)*1/2",
            "-(3) + x",
            "a*(b*c)",
            "a + (b + c)",
            "x - (2)",
            "x_12*inv(y_1 - z)",
        ] {
            let f = RatFormula::parse(s).unwrap();
            let printed = f.to_string();
            assert_eq!(RatFormula::parse(&printed).unwrap(), f, "{s} -> {printed}");
        }
    }

    #[test]
    fn parse_errors_have_positions() {
        assert!(matches!(RatFormula::parse("x + "), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(RatFormula::parse("inv(x"), Err(Error::Parse { .. })));
        assert!(matches!(RatFormula::parse("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(RatFormula::parse("x y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn shared_subterms_are_counted_once() {
        let x = RatFormula::var("x");
        let s = x.add(&x);
        let f = s.mul(&s);
        assert_eq!(f.dag_size(), 3);
        assert_eq!(f.vars().into_iter().collect::<Vec<_>>(), vec!["x".to_string()]);
    }
}
