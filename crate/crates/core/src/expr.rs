//! Symbolic construction expressions such as `S-2(S-2(s3))`.
//!
//! Grammar:
//!
//! ```text
//! expr  := atom | op '(' expr ')'
//! atom  := 'e' N | 's' N | 'c' N | 'h' N | 'he' N | 'hstar' N
//!        | 'Hkm(' N ',' N ')' | 'circ(' N ')'
//! op    := 'S+' N | 'S-' N | 'S' N | 'C' N | 'H'
//! ```
//!
//! `S+m` substitutes the larger side, `S-m` the smaller side, and `Sm` is
//! used when both sides have the same size (the left side is substituted).

use std::fmt;
use std::str::FromStr;

use crate::canon::are_isomorphic;
use crate::constructions::{
    circulant_size_two, clique_expansion, complete_graph, empty_graph, extended_hamming_graph, h_star,
    hamming_clique_expansion, hamming_expansion, hamming_graph, star_expansion, star_graph,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::orbit::elc_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarSide {
    /// Substitute the larger side.
    Plus,
    /// Substitute the smaller side.
    Minus,
    /// Sides of equal size.
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    Empty(usize),
    Star(usize),
    Complete(usize),
    Hamming(usize),
    ExtendedHamming(usize),
    HStar(usize),
    HammingClique(usize, usize),
    Circulant(usize),
    StarExpansion(StarSide, usize, Box<ConstructionSpec>),
    CliqueExpansion(usize, Box<ConstructionSpec>),
    HammingExpansion(Box<ConstructionSpec>),
}

/// A built graph and any notes about operands that fall outside the
/// hypotheses the constructions rely on.
#[derive(Clone, Debug)]
pub struct Built {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

impl ConstructionSpec {
    /// Number of vertices of the built graph, computed symbolically.
    pub fn order(&self) -> usize {
        use ConstructionSpec::*;
        match self {
            Empty(n) | Star(n) | Complete(n) => *n,
            Hamming(r) => (1 << r) - 1,
            ExtendedHamming(r) | HStar(r) => 1 << r,
            HammingClique(k, m) => 7 * k + m,
            Circulant(m) => 4 * m,
            StarExpansion(_, m, g) | CliqueExpansion(m, g) => m * g.order(),
            HammingExpansion(g) => 7 * g.order(),
        }
    }

    /// Number of operators in the expression.
    pub fn operator_count(&self) -> usize {
        use ConstructionSpec::*;
        match self {
            StarExpansion(_, _, g) | CliqueExpansion(_, g) | HammingExpansion(g) => 1 + g.operator_count(),
            _ => 0,
        }
    }

    /// The innermost atom.
    pub fn atom(&self) -> &ConstructionSpec {
        use ConstructionSpec::*;
        match self {
            StarExpansion(_, _, g) | CliqueExpansion(_, g) | HammingExpansion(g) => g.atom(),
            a => a,
        }
    }

    fn atom_priority(&self) -> usize {
        use ConstructionSpec::*;
        match self.atom() {
            Star(_) => 0,
            Complete(_) => 1,
            Hamming(_) => 2,
            ExtendedHamming(_) => 3,
            HammingClique(..) => 4,
            HStar(_) => 5,
            Empty(_) => 6,
            Circulant(_) => 7,
            _ => unreachable!("atom() returns an atom"),
        }
    }

    /// Ordering used to pick one name among several expressions for the
    /// same graph: fewer operators, then atom kind, then the text.
    pub fn preference(&self) -> (usize, usize, String) {
        (self.operator_count(), self.atom_priority(), self.to_string())
    }

    pub fn build(&self) -> Result<Graph> {
        Ok(self.build_with(false)?.graph)
    }

    /// Builds the graph. Operands of the expansions are checked for being
    /// connected with ELC orbit of size one; a failure is an error when
    /// `strict` is set and a warning otherwise.
    pub fn build_with(&self, strict: bool) -> Result<Built> {
        let mut warnings = Vec::new();
        let graph = self.build_inner(strict, &mut warnings)?;
        Ok(Built { graph, warnings })
    }

    fn build_inner(&self, strict: bool, warnings: &mut Vec<String>) -> Result<Graph> {
        use ConstructionSpec::*;
        match self {
            Empty(n) => empty_graph(*n),
            Star(n) => star_graph(*n),
            Complete(n) => complete_graph(*n),
            Hamming(r) => hamming_graph(*r),
            ExtendedHamming(r) => extended_hamming_graph(*r),
            HStar(r) => h_star(*r),
            HammingClique(k, m) => hamming_clique_expansion(*k, *m),
            Circulant(m) => circulant_size_two(*m),
            StarExpansion(which, m, inner) => {
                let g = inner.build_inner(strict, warnings)?;
                check_operand(inner, &g, strict, warnings)?;
                if !g.is_connected() {
                    return Err(Error::Disconnected);
                }
                let p = g.bipartition().ok_or(Error::NotBipartite)?;
                let (a, b) = p.sizes();
                let side = match which {
                    StarSide::Equal => {
                        if a != b {
                            return Err(Error::InvalidParameter(format!(
                                "{self}: sides have sizes {a} and {b}; use S+ or S-"
                            )));
                        }
                        let left = star_expansion(&g, &p, Side::Left, *m)?;
                        let right = star_expansion(&g, &p, Side::Right, *m)?;
                        if !are_isomorphic(&left, &right) {
                            let msg = format!("{self}: substituting either side gives different graphs");
                            if strict {
                                return Err(Error::InvalidParameter(msg));
                            }
                            warnings.push(msg);
                        }
                        return Ok(left);
                    }
                    _ if a == b => {
                        return Err(Error::InvalidParameter(format!(
                            "{self}: both sides have {a} vertices; use S{m}(...)"
                        )));
                    }
                    StarSide::Plus => p.smaller_side().other(),
                    StarSide::Minus => p.smaller_side(),
                };
                star_expansion(&g, &p, side, *m)
            }
            CliqueExpansion(m, inner) => {
                let g = inner.build_inner(strict, warnings)?;
                check_operand(inner, &g, strict, warnings)?;
                clique_expansion(&g, *m)
            }
            HammingExpansion(inner) => {
                let g = inner.build_inner(strict, warnings)?;
                check_operand(inner, &g, strict, warnings)?;
                hamming_expansion(&g)
            }
        }
    }
}

fn check_operand(spec: &ConstructionSpec, g: &Graph, strict: bool, warnings: &mut Vec<String>) -> Result<()> {
    let msg = match elc_witness(g) {
        Err(_) => format!("operand {spec} is disconnected"),
        Ok(Some((u, v))) => format!("operand {spec} is not ELC-preserved (edge {{{u},{v}}} changes it)"),
        Ok(None) => return Ok(()),
    };
    if strict {
        Err(Error::InvalidParameter(msg))
    } else {
        warnings.push(msg);
        Ok(())
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        match self {
            Empty(n) => write!(f, "e{n}"),
            Star(n) => write!(f, "s{n}"),
            Complete(n) => write!(f, "c{n}"),
            Hamming(r) => write!(f, "h{r}"),
            ExtendedHamming(r) => write!(f, "he{r}"),
            HStar(r) => write!(f, "hstar{r}"),
            HammingClique(k, m) => write!(f, "Hkm({k},{m})"),
            Circulant(m) => write!(f, "circ({m})"),
            StarExpansion(StarSide::Plus, m, g) => write!(f, "S+{m}({g})"),
            StarExpansion(StarSide::Minus, m, g) => write!(f, "S-{m}({g})"),
            StarExpansion(StarSide::Equal, m, g) => write!(f, "S{m}({g})"),
            CliqueExpansion(m, g) => write!(f, "C{m}({g})"),
            HammingExpansion(g) => write!(f, "H({g})"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in construction expression", self.pos))
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {lit:?}")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("digits")
            .parse()
            .map_err(|_| self.err("number too large"))
    }

    fn inner(&mut self) -> Result<Box<ConstructionSpec>> {
        self.expect("(")?;
        let e = self.expr()?;
        self.expect(")")?;
        Ok(Box::new(e))
    }

    fn expr(&mut self) -> Result<ConstructionSpec> {
        use ConstructionSpec::*;
        if self.eat("Hkm(") {
            let k = self.number()?;
            self.expect(",")?;
            let m = self.number()?;
            self.expect(")")?;
            return Ok(HammingClique(k, m));
        }
        if self.eat("H") {
            return Ok(HammingExpansion(self.inner()?));
        }
        if self.eat("S+") {
            let m = self.number()?;
            return Ok(StarExpansion(StarSide::Plus, m, self.inner()?));
        }
        if self.eat("S-") {
            let m = self.number()?;
            return Ok(StarExpansion(StarSide::Minus, m, self.inner()?));
        }
        if self.eat("S") {
            let m = self.number()?;
            return Ok(StarExpansion(StarSide::Equal, m, self.inner()?));
        }
        if self.eat("C") {
            let m = self.number()?;
            return Ok(CliqueExpansion(m, self.inner()?));
        }
        if self.eat("circ(") {
            let m = self.number()?;
            self.expect(")")?;
            return Ok(Circulant(m));
        }
        if self.eat("hstar") {
            return Ok(HStar(self.number()?));
        }
        if self.eat("he") {
            return Ok(ExtendedHamming(self.number()?));
        }
        if self.eat("h") {
            return Ok(Hamming(self.number()?));
        }
        if self.eat("e") {
            return Ok(Empty(self.number()?));
        }
        if self.eat("s") {
            return Ok(Star(self.number()?));
        }
        if self.eat("c") {
            return Ok(Complete(self.number()?));
        }
        Err(self.err("unknown construction"))
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
        let mut p = Parser { s: cleaned.as_bytes(), pos: 0 };
        let e = p.expr()?;
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["s3", "S-2(S-2(s3))", "S+2(h3)", "S2(he3)", "C2(S-2(s3))", "H(s2)", "Hkm(1,5)", "circ(3)", "hstar4", "he4", "e1", "c12"] {
            let e: ConstructionSpec = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        let e: ConstructionSpec = "S−2 ( s3 )".parse().unwrap();
        assert_eq!(e.to_string(), "S-2(s3)");
    }

    #[test]
    fn parse_errors() {
        for s in ["", "x3", "s", "S-2s3", "S-2(s3", "Hkm(1)", "s3)", "C(s3)"] {
            assert!(s.parse::<ConstructionSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn orders() {
        let e: ConstructionSpec = "S-2(S-2(s3))".parse().unwrap();
        assert_eq!(e.order(), 12);
        assert_eq!(e.build().unwrap().order(), 12);
        assert_eq!(e.operator_count(), 2);
        let h: ConstructionSpec = "H(s2)".parse().unwrap();
        assert_eq!(h.order(), 14);
        assert_eq!("Hkm(3,3)".parse::<ConstructionSpec>().unwrap().order(), 24);
    }

    #[test]
    fn side_rules() {
        assert!("S2(s3)".parse::<ConstructionSpec>().unwrap().build().is_err());
        assert!("S+2(s2)".parse::<ConstructionSpec>().unwrap().build().is_err());
        let g = "S+3(s4)".parse::<ConstructionSpec>().unwrap().build().unwrap();
        assert!(are_isomorphic(&g, &star_graph(12).unwrap()));
    }

    #[test]
    fn strict_mode() {
        let e: ConstructionSpec = "C2(circ(3))".parse().unwrap();
        let b = e.build_with(false).unwrap();
        assert_eq!(b.warnings.len(), 1);
        assert!(e.build_with(true).is_err());
        assert!("S-2(s3)".parse::<ConstructionSpec>().unwrap().build_with(true).unwrap().warnings.is_empty());
    }
}
