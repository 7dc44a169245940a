//! Parser for the term and law syntax.
//!
//! ```text
//! law    := [atom {"," atom} "=>"] atom
//! atom   := term ("=" | "<=" | ">=" | "!=") term
//! term   := meet {"+" meet}
//! meet   := par {"&" par}
//! par    := parikh {"||" parikh}
//! parikh := seq {";" seq}
//! seq    := post {"." post}
//! post   := prim {"^*" | "^w" | "^inf"}
//! prim   := const | var [":" sort] | func "(" term ["," term] ")" | "(" term ")"
//! ```

use thiserror::Error;

use super::term::{unify_sorts, Atom, BinOp, Const, Expected, Law, LawModel, RelOp, Term, TermError, UnOp};
use crate::structure::ClassTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at offset {pos}")]
    Char { ch: char, pos: usize },
    #[error("expected {expected} at offset {pos}, found {found}")]
    Unexpected { expected: String, found: String, pos: usize },
    #[error("`{0}` is a function and needs arguments")]
    BareFunction(String),
    #[error("function `{name}` takes {expected} argument(s)")]
    Arity { name: String, expected: &'static str },
    #[error("unknown sort `{0}`")]
    Sort(String),
    #[error(transparent)]
    Term(#[from] TermError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(&'static str),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Num(s) => format!("`{s}`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

const SYMBOLS: [&str; 16] = ["||", "<=", ">=", "!=", "=>", "+", "&", ";", ".", "^", "*", "(", ")", ",", ":", "="];

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_alphabetic() || ch == '_' || ch.is_ascii_digit() {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = if ch.is_ascii_digit() { Tok::Num(word) } else { Tok::Ident(word) };
            out.push((tok, pos));
        } else {
            let rest = &text[pos..];
            let sym = SYMBOLS
                .iter()
                .find(|s| rest.starts_with(**s))
                .ok_or(ParseError::Char { ch, pos })?;
            for _ in 0..sym.chars().count() {
                chars.next();
            }
            out.push((Tok::Sym(sym), pos));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, sym: &str) -> bool {
        if *self.peek() == Tok::Sym(sym_static(sym)) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{sym}`")))
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::Unexpected { expected: expected.to_string(), found: self.peek().describe(), pos: self.pos() }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.infix(1)
    }

    fn infix(&mut self, level: u8) -> Result<Term, ParseError> {
        const LEVELS: [(&str, BinOp); 5] = [
            ("+", BinOp::Union),
            ("&", BinOp::Meet),
            ("||", BinOp::Par),
            (";", BinOp::Parikh),
            (".", BinOp::Seq),
        ];
        if level as usize > LEVELS.len() {
            return self.postfix();
        }
        let (sym, op) = LEVELS[level as usize - 1];
        let mut left = self.infix(level + 1)?;
        while self.eat(sym) {
            let right = self.infix(level + 1)?;
            left = Term::binary(op, left, right);
        }
        Ok(left)
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.primary()?;
        while self.eat("^") {
            let op = match self.bump() {
                Tok::Sym("*") => UnOp::Star,
                Tok::Ident(w) if w == "w" => UnOp::Omega,
                Tok::Ident(w) if w == "inf" => UnOp::Infinity,
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("`*`, `w` or `inf` after `^`"));
                }
            };
            t = Term::unary(op, t);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Sym("(") => {
                self.bump();
                let t = self.term()?;
                self.expect(")")?;
                Ok(t)
            }
            Tok::Num(n) => {
                let c = match n.as_str() {
                    "0" => Const::Zero,
                    "1s" => Const::OneSigma,
                    "1p" => Const::OnePi,
                    _ => return Err(self.unexpected("a constant `0`, `1s` or `1p`")),
                };
                self.bump();
                Ok(Term::Const(c))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "U" => return Ok(Term::Const(Const::Univ)),
                    "n1p" => return Ok(Term::Const(Const::CoOnePi)),
                    _ => {}
                }
                if is_function(&name) {
                    if *self.peek() != Tok::Sym("(") {
                        return Err(ParseError::BareFunction(name));
                    }
                    self.bump();
                    let first = self.term()?;
                    let second = if self.eat(",") { Some(self.term()?) } else { None };
                    self.expect(")")?;
                    return build_call(&name, first, second);
                }
                let sort = if self.eat(":") {
                    match self.bump() {
                        Tok::Ident(s) => s.parse::<ClassTag>().map_err(|_| ParseError::Sort(s))?,
                        _ => {
                            self.at -= 1;
                            return Err(self.unexpected("a sort name"));
                        }
                    }
                } else {
                    ClassTag::General
                };
                Ok(Term::Var(name, sort))
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let lhs = self.term()?;
        let rel = match self.peek() {
            Tok::Sym("=") => RelOp::Eq,
            Tok::Sym("<=") => RelOp::Leq,
            Tok::Sym(">=") => {
                self.bump();
                let rhs = self.term()?;
                return Ok(Atom { lhs: rhs, rel: RelOp::Leq, rhs: lhs });
            }
            Tok::Sym("!=") => RelOp::Neq,
            _ => return Err(self.unexpected("`=`, `<=`, `>=` or `!=`")),
        };
        self.bump();
        let rhs = self.term()?;
        Ok(Atom { lhs, rel, rhs })
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

fn sym_static(sym: &str) -> &'static str {
    SYMBOLS.iter().find(|s| **s == sym).copied().unwrap_or("")
}

const FUNCTIONS: [&str; 15] = [
    "d", "tau", "nu", "up", "nabla", "comp", "term", "vec", "dia", "star", "omega", "inf", "pstar", "gstar", "sstar",
];

fn is_function(name: &str) -> bool {
    FUNCTIONS.contains(&name)
}

fn build_call(name: &str, first: Term, second: Option<Term>) -> Result<Term, ParseError> {
    let arity = |expected| ParseError::Arity { name: name.to_string(), expected };
    match (name, second) {
        ("dia", Some(p)) => Ok(Term::binary(BinOp::Diamond, first, p)),
        ("dia", None) => Err(arity("2")),
        ("star", Some(s)) => Ok(Term::binary(BinOp::StarBinary, first, s)),
        ("omega", Some(s)) => Ok(Term::binary(BinOp::OmegaBinary, first, s)),
        (_, Some(_)) => Err(arity(if name == "star" || name == "omega" { "1 or 2" } else { "1" })),
        (_, None) => {
            let op = UnOp::ALL.into_iter().find(|op| op.function_name() == name).expect("known function");
            Ok(Term::unary(op, first))
        }
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: tokenize(text)?, at: 0 })
}

/// Parses a single term; variable sorts are unified across occurrences.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text)?;
    let mut t = p.term()?;
    p.finish()?;
    unify_sorts(&mut [&mut t])?;
    Ok(t)
}

/// Parses `h1, h2 => lhs rel rhs` (hypotheses optional) into its parts.
pub fn parse_law_text(text: &str) -> Result<(Vec<Atom>, Atom), ParseError> {
    let mut p = parser(text)?;
    let mut atoms = vec![p.atom()?];
    while p.eat(",") {
        atoms.push(p.atom()?);
    }
    let (mut hyps, mut concl) = if p.eat("=>") {
        let concl = p.atom()?;
        (atoms, concl)
    } else if atoms.len() == 1 {
        (Vec::new(), atoms.pop().expect("one atom"))
    } else {
        return Err(p.unexpected("`=>` after hypotheses"));
    };
    p.finish()?;
    if concl.rel == RelOp::Neq {
        return Err(TermError::NeqConclusion.into());
    }
    let mut terms: Vec<&mut Term> = vec![&mut concl.lhs, &mut concl.rhs];
    for h in hyps.iter_mut() {
        terms.push(&mut h.lhs);
        terms.push(&mut h.rhs);
    }
    unify_sorts(&mut terms)?;
    Ok((hyps, concl))
}

/// Parses a law text into an ad-hoc law, expected to be valid.
pub fn parse_law(name: &str, text: &str) -> Result<Law, ParseError> {
    let (hypotheses, conclusion) = parse_law_text(text)?;
    Ok(Law {
        name: name.to_string(),
        hypotheses,
        conclusion,
        expected: Expected::Valid,
        anchor: String::new(),
        model: LawModel::Relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let t = parse_term("x + y & z || w ; p . q").unwrap();
        assert_eq!(t.to_string(), "x + y & z || w ; p . q");
        let Term::Binary(BinOp::Union, _, r) = &t else { panic!("{t:?}") };
        assert!(matches!(r.as_ref(), Term::Binary(BinOp::Meet, _, _)));
        let t = parse_term("x . y . z").unwrap();
        let Term::Binary(BinOp::Seq, l, _) = &t else { panic!() };
        assert!(matches!(l.as_ref(), Term::Binary(BinOp::Seq, _, _)));
        assert_eq!(parse_term("x . (y . z)").unwrap().to_string(), "x . (y . z)");
    }

    #[test]
    fn postfix_and_functions() {
        let t = parse_term("(x . y)^* + x^w^inf + star(x, y) + dia(x, d(y))").unwrap();
        assert_eq!(t.to_string(), "(x . y)^* + x^w^inf + star(x, y) + dia(x, d(y))");
        assert_eq!(parse_term("star(x)").unwrap(), parse_term("x^*").unwrap());
        assert_eq!(parse_term("omega(x)").unwrap(), parse_term("x^w").unwrap());
        assert_eq!(parse_term("inf(x)").unwrap(), parse_term("x^inf").unwrap());
        for f in ["tau", "nu", "up", "nabla", "comp", "term", "vec", "pstar", "gstar", "sstar", "d"] {
            let t = parse_term(&format!("{f}(x)")).unwrap();
            assert_eq!(t.to_string(), format!("{f}(x)"));
        }
    }

    #[test]
    fn constants() {
        let t = parse_term("0 + 1s + 1p + U + n1p").unwrap();
        assert_eq!(t.to_string(), "0 + 1s + 1p + U + n1p");
    }

    #[test]
    fn sorts_are_unified() {
        let t = parse_term("p:sub . x || p").unwrap();
        assert_eq!(t.variables(), vec![("p".to_string(), ClassTag::SeqSubid), ("x".to_string(), ClassTag::General)]);
        assert!(matches!(parse_term("p:sub . p:term"), Err(ParseError::Term(TermError::ConflictingSort { .. }))));
        let t = parse_term("dia(x, p)").unwrap();
        assert_eq!(t.variables()[1].1, ClassTag::SeqSubid);
        assert!(parse_term("dia(x, p:vec)").is_err());
    }

    #[test]
    fn laws() {
        let (h, c) = parse_law_text("z || z <= z => (x || y) . z = x . z || y . z").unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(c.rel, RelOp::Eq);
        let (_, c) = parse_law_text("x >= y").unwrap();
        assert_eq!(c.to_string(), "y <= x");
        assert!(parse_law_text("x != y").is_err());
        assert!(parse_law_text("x = y, y = x").is_err());
        let law = parse_law("t", "x & n1p != 0 => n1p . ((x & n1p) . n1p) = n1p").unwrap();
        assert_eq!(law.text(), "x & n1p != 0 => n1p . ((x & n1p) . n1p) = n1p");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_term("x $ y"), Err(ParseError::Char { .. })));
        assert!(matches!(parse_term("d + x"), Err(ParseError::BareFunction(_))));
        assert!(matches!(parse_term("tau(x, y)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse_term("x:foo"), Err(ParseError::Sort(_))));
        assert!(parse_term("x +").is_err());
        assert!(parse_term("(x").is_err());
        assert!(parse_term("x y").is_err());
        assert!(parse_term("2").is_err());
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "x . y . z",
            "x . (y . z)",
            "(x + y) . z",
            "x & (y + z)",
            "(x . 1p || 1s) . y",
            "comp(x) + (x || y)^*",
            "d(x:sub . U)",
            "x ; (y || U)",
        ] {
            let t = parse_term(text).unwrap();
            assert_eq!(parse_term(&t.to_string()).unwrap(), t, "{text}");
        }
    }
}
