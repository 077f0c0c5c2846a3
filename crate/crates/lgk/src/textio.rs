//! Text and file formats: the coefficient expression grammar, partition
//! syntax, JSON relation files, and canonical printing.
//!
//! Coefficient grammar (whitespace insignificant, leading `-` allowed on
//! the expression and inside `e^{...}`):
//!
//! ```text
//! expr   := ["-"] term { ("+" | "-") term }
//! term   := factor { "*" factor }
//! factor := integer | "Q" ["^" sint] | "e^{" lin "}" | "(" expr ")"
//! lin    := ["-"] sterm { ("+" | "-") sterm }
//! sterm  := [integer] var | integer
//! var    := "a" index | "eps" index
//! sint   := ["-"] integer
//! ```
//!
//! `a i` is the simple root `alpha_i` (converted to epsilon coordinates),
//! `eps i` is `eps_i` directly. Printing is canonical: terms are ordered
//! by (`Q`-exponent, exponent vector), so equal values always render to
//! identical strings and `parse(print(x)) = x`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::kring::{AffineCombo, NovikovCoeff, QuantumCombo};
use crate::peterson::{HomologyImage, TransportedRelation};
use crate::rootdata::RootSystemC;
use crate::shapes::{PartitionError, PartitionPC, StrictPartition};

#[derive(Debug, thiserror::Error)]
pub enum TextError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid partition '{text}': {source}")]
    Partition {
        text: String,
        #[source]
        source: PartitionError,
    },
    #[error("invalid partition '{text}': {msg}")]
    PartitionSyntax { text: String, msg: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid relation file {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("relation kind must be \"affine-k-product\", found \"{kind}\"")]
    Kind { kind: String },
    #[error("coefficient '{text}' involves Q; affine-side coefficients must be Q-free")]
    NotLaurent { text: String },
}

// ---------------------------------------------------------------------------
// lexing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Word(String),
    Plus,
    Minus,
    Star,
    Caret,
    LBrace,
    RBrace,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, TextError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = text[start..i].parse().map_err(|_| TextError::Parse {
                    pos: start,
                    msg: "integer too large".to_string(),
                })?;
                toks.push(Token { tok: Tok::Int(v), pos });
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push(Token {
                    tok: Tok::Word(text[start..i].to_string()),
                    pos,
                });
                continue;
            }
            '+' => toks.push(Token { tok: Tok::Plus, pos }),
            '-' => toks.push(Token { tok: Tok::Minus, pos }),
            '*' => toks.push(Token { tok: Tok::Star, pos }),
            '^' => toks.push(Token { tok: Tok::Caret, pos }),
            '{' => toks.push(Token { tok: Tok::LBrace, pos }),
            '}' => toks.push(Token { tok: Tok::RBrace, pos }),
            '(' => toks.push(Token { tok: Tok::LParen, pos }),
            ')' => toks.push(Token { tok: Tok::RParen, pos }),
            other => {
                return Err(TextError::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// parsing

struct Parser {
    sys: RootSystemC,
    toks: Vec<Token>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.tok.clone());
        self.i += 1;
        t
    }

    fn eat(&mut self, want: &Tok, what: &str) -> Result<(), TextError> {
        if self.peek() == Some(want) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> TextError {
        TextError::Parse { pos: self.pos(), msg }
    }

    fn expr(&mut self) -> Result<NovikovCoeff, TextError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NovikovCoeff, TextError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.i += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NovikovCoeff, TextError> {
        let n = self.sys.rank();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(NovikovCoeff::monomial(n, 0, vec![0; n], v)),
            Some(Tok::Word(w)) if w == "Q" => {
                let mut q = 1;
                if self.peek() == Some(&Tok::Caret) {
                    self.i += 1;
                    q = self.sint()?;
                }
                Ok(NovikovCoeff::q_power(n, q))
            }
            Some(Tok::Word(w)) if w == "e" => {
                self.eat(&Tok::Caret, "'^' after e")?;
                self.eat(&Tok::LBrace, "'{' after e^")?;
                let eps = self.lin()?;
                self.eat(&Tok::RBrace, "'}' closing the exponent")?;
                Ok(NovikovCoeff::monomial(n, 0, eps, 1))
            }
            Some(Tok::Word(w)) => Err(self.err(format!("unknown factor '{w}'"))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err("expected a factor".to_string())),
        }
    }

    fn sint(&mut self) -> Result<i64, TextError> {
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            sign = -1;
        }
        match self.bump() {
            Some(Tok::Int(v)) => Ok(sign * v),
            _ => Err(self.err("expected an integer exponent".to_string())),
        }
    }

    fn lin(&mut self) -> Result<Vec<i64>, TextError> {
        let mut eps = vec![0i64; self.sys.rank()];
        let mut sign = 1i64;
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            sign = -1;
        }
        loop {
            self.sterm(sign, &mut eps)?;
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(eps),
            }
            self.i += 1;
        }
    }

    fn sterm(&mut self, sign: i64, eps: &mut [i64]) -> Result<(), TextError> {
        let n = self.sys.rank();
        let mut coeff = None;
        if let Some(Tok::Int(v)) = self.peek() {
            coeff = Some(*v);
            self.i += 1;
        }
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.i += 1;
                let idx = match self.bump() {
                    Some(Tok::Int(v)) => v,
                    _ => return Err(self.err(format!("expected index after '{w}'"))),
                };
                if idx < 1 || idx > n as i64 {
                    return Err(self.err(format!("index {idx} out of range 1..={n}")));
                }
                let idx = idx as usize;
                let c = sign * coeff.unwrap_or(1);
                match w.as_str() {
                    "a" => {
                        if idx < n {
                            eps[idx - 1] += c;
                            eps[idx] -= c;
                        } else {
                            eps[n - 1] += 2 * c;
                        }
                    }
                    "eps" => eps[idx - 1] += c,
                    _ => return Err(self.err(format!("unknown variable '{w}'"))),
                }
                Ok(())
            }
            _ => match coeff {
                Some(0) => Ok(()),
                Some(c) => Err(self.err(format!(
                    "constant term {c} in an exponent is not a lattice vector"
                ))),
                None => Err(self.err("expected a term in the exponent".to_string())),
            },
        }
    }
}

/// Parses a coefficient expression at the given rank.
pub fn parse_coeff(sys: RootSystemC, text: &str) -> Result<NovikovCoeff, TextError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        sys,
        toks,
        i: 0,
        end: text.len(),
    };
    let value = p.expr()?;
    if p.i < p.toks.len() {
        return Err(p.err("unexpected trailing input".to_string()));
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// printing

fn print_lin(eps: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in eps.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.unsigned_abs();
        if mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("eps{}", i + 1));
    }
    out
}

/// Canonical text form: terms ordered by (`Q`-exponent, exponent vector),
/// each term `[integer *] [Q-power *] [e-power]`.
pub fn print_coeff(x: &NovikovCoeff) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (q, eps, c) in x.terms() {
        let negative = c < 0;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_body(c.unsigned_abs(), q, eps));
    }
    out
}

fn term_body(mag: u64, q: i64, eps: &[i64]) -> String {
    let mut factors: Vec<String> = Vec::new();
    let trivial = q == 0 && eps.iter().all(|&e| e == 0);
    if mag != 1 || trivial {
        factors.push(mag.to_string());
    }
    if q == 1 {
        factors.push("Q".to_string());
    } else if q != 0 {
        factors.push(format!("Q^{q}"));
    }
    if eps.iter().any(|&e| e != 0) {
        factors.push(format!("e^{{{}}}", print_lin(eps)));
    }
    factors.join(" * ")
}

fn class_inner(mu: &StrictPartition) -> String {
    if mu.is_empty() {
        String::new()
    } else {
        mu.to_string()
    }
}

/// Renders `Q^k * O[mu]`, dropping a unit `Q`-power.
pub fn print_phi_image(q_exp: i64, mu: &StrictPartition) -> String {
    let class = format!("O[{}]", class_inner(mu));
    match q_exp {
        0 => class,
        1 => format!("Q * {class}"),
        k => format!("Q^{k} * {class}"),
    }
}

/// Renders a homology image as `0` or `q^k * S[mu]`.
pub fn print_homology(image: &HomologyImage) -> String {
    match image {
        HomologyImage::Zero => "0".to_string(),
        HomologyImage::Class { q_exp, mu } => {
            let class = format!("S[{}]", class_inner(mu));
            match q_exp {
                0 => class,
                1 => format!("q * {class}"),
                k => format!("q^{k} * {class}"),
            }
        }
    }
}

fn print_quantum_term(mu: &StrictPartition, coeff: &NovikovCoeff) -> String {
    let class = format!("O[{}]", class_inner(mu));
    if coeff.is_one() {
        return class;
    }
    let mut terms = coeff.terms();
    if let (Some((q, eps, 1)), None) = {
        let first = terms.next();
        (first, terms.next())
    } {
        if !(q == 0 && eps.iter().all(|&e| e == 0)) {
            return format!("{} * {class}", term_body(1, q, eps));
        }
    }
    format!("({}) * {class}", print_coeff(coeff))
}

/// Canonical expansion text, terms in basis order.
pub fn print_quantum_combo(x: &QuantumCombo) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.terms()
        .map(|(mu, c)| print_quantum_term(mu, c))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// One-line canonical form of a transported relation.
pub fn print_transported(rel: &TransportedRelation) -> String {
    format!(
        "O[{}] * O[{}] = {}",
        class_inner(&rel.lhs.0),
        class_inner(&rel.lhs.1),
        print_quantum_combo(&rel.rhs)
    )
}

/// Canonical JSON for one coefficient: a list of
/// `{"eps": [...], "q": int, "c": int}` objects in canonical term order.
pub fn coeff_to_json(x: &NovikovCoeff) -> serde_json::Value {
    serde_json::Value::Array(
        x.terms()
            .map(|(q, eps, c)| {
                serde_json::json!({ "eps": eps, "q": q, "c": c })
            })
            .collect(),
    )
}

/// JSON form of a transported relation.
pub fn transported_to_json(n: usize, rel: &TransportedRelation) -> serde_json::Value {
    let rhs: Vec<serde_json::Value> = rel
        .rhs
        .terms()
        .map(|(mu, c)| {
            serde_json::json!({ "part": mu.to_string(), "coeff": coeff_to_json(c) })
        })
        .collect();
    serde_json::json!({
        "n": n,
        "lhs": [rel.lhs.0.to_string(), rel.lhs.1.to_string()],
        "rhs": rhs,
        "warnings": rel.warnings,
    })
}

/// Shifted Young diagram: row `i` is indented `i - 1` cells.
pub fn diagram(mu: &StrictPartition) -> String {
    let mut out = String::new();
    for (i, &p) in mu.parts().iter().enumerate() {
        out.push_str(&"  ".repeat(i));
        out.push_str(&"[]".repeat(p));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// partitions

/// Parses `"3,3,2,1"` or `"[]"` (empty) at the given rank.
pub fn parse_partition(n: usize, text: &str) -> Result<PartitionPC, TextError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "[]" {
        return Ok(PartitionPC::empty(n));
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        let part: usize = piece.parse().map_err(|_| TextError::PartitionSyntax {
            text: text.to_string(),
            msg: format!("'{piece}' is not a nonnegative integer"),
        })?;
        parts.push(part);
    }
    PartitionPC::new(n, parts).map_err(|source| TextError::Partition {
        text: text.to_string(),
        source,
    })
}

// ---------------------------------------------------------------------------
// relation files

/// One term `coeff * O_part * (O_{(n+1)})^{loc_exp}` of a relation file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: String,
    pub part: String,
    #[serde(default)]
    pub loc_exp: i64,
}

/// A product relation on the affine side, as stored on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationFile {
    pub n: usize,
    pub kind: String,
    pub lhs: [String; 2],
    pub rhs: Vec<RelationTerm>,
    #[serde(default)]
    pub notes: String,
}

pub fn load_relation(path: &Path) -> Result<RelationFile, TextError> {
    let text = std::fs::read_to_string(path).map_err(|source| TextError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| TextError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// Validates a relation file and builds the two factors and the expansion.
/// Coefficients must be `Q`-free: localization on the affine side is
/// expressed only through `loc_exp`.
pub fn relation_to_combo(
    file: &RelationFile,
) -> Result<(PartitionPC, PartitionPC, AffineCombo), TextError> {
    if file.kind != "affine-k-product" {
        return Err(TextError::Kind {
            kind: file.kind.clone(),
        });
    }
    let sys = RootSystemC::new(file.n);
    let lambda = parse_partition(file.n, &file.lhs[0])?;
    let mu = parse_partition(file.n, &file.lhs[1])?;
    let mut combo = AffineCombo::zero(file.n);
    for term in &file.rhs {
        let part = parse_partition(file.n, &term.part)?;
        let coeff = parse_coeff(sys, &term.coeff)?;
        let laurent = coeff.to_laurent().ok_or_else(|| TextError::NotLaurent {
            text: term.coeff.clone(),
        })?;
        combo.add_term(part, term.loc_exp, &laurent);
    }
    Ok((lambda, mu, combo))
}
