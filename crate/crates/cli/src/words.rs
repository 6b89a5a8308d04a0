//! Element literals: products of generator names, permutation cycles,
//! `2×2` matrices and coordinate lists, each optionally raised to `^k`.
//!
//! ```text
//! word    := factor (['*'] factor)*
//! factor  := atom ['^' int]
//! atom    := '1' | name ['(' int ')'] | cycle+ | '[[' int ',' int '],[' int ',' int ']]'
//!          | '[' word (',' word)* ']'
//! cycle   := '(' [int ((','|' ') int)*] ')'
//! ```
//!
//! Names are matched longest-first against the vocabulary of the group
//! model, so `xy` reads as `x·y`. Offsets are byte positions in the input.

use dessins::{Error, Result};

/// A generator name and whether it takes a parenthesised integer argument.
#[derive(Debug, Clone)]
pub struct Name {
    pub name: String,
    pub takes_arg: bool,
}

impl Name {
    pub fn plain(name: &str) -> Self {
        Name { name: name.to_string(), takes_arg: false }
    }

    pub fn with_arg(name: &str) -> Self {
        Name { name: name.to_string(), takes_arg: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomKind {
    One,
    Name { name: String, arg: Option<i64> },
    /// 1-based points.
    Cycles(Vec<Vec<usize>>),
    /// Row-major `[a, b, c, d]`.
    Matrix([i64; 4]),
    /// Unparsed entries with their absolute offsets.
    List(Vec<(String, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub kind: AtomKind,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: i64,
}

pub fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{c}'")))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        match self.peek() {
            Some(c) => parse_error(self.at(), format!("{what}, found '{c}'")),
            None => parse_error(self.at(), format!("{what}, found end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        text.parse().map_err(|_| {
            self.pos = start;
            self.unexpected("expected an integer")
        })
    }
}

/// Parse `src` as a word over `names`; offsets are shifted by `base`.
pub fn parse_word(src: &str, base: usize, names: &[Name]) -> Result<Vec<Factor>> {
    let mut cur = Cursor { src, pos: 0, base };
    let mut factors = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(parse_error(base, "empty element"));
    }
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        if !factors.is_empty() && cur.eat('*') {
            cur.skip_ws();
        }
        let atom = parse_atom(&mut cur, names)?;
        cur.skip_ws();
        let exp = if cur.eat('^') {
            cur.skip_ws();
            let braced = cur.eat('(') || cur.eat('{');
            let e = cur.int()?;
            if braced && !(cur.eat(')') || cur.eat('}')) {
                return Err(cur.unexpected("expected closing bracket of exponent"));
            }
            e
        } else {
            1
        };
        factors.push(Factor { atom, exp });
    }
    Ok(factors)
}

fn parse_atom(cur: &mut Cursor<'_>, names: &[Name]) -> Result<Atom> {
    let offset = cur.at();
    match cur.peek() {
        Some('1') => {
            cur.pos += 1;
            Ok(Atom { kind: AtomKind::One, offset })
        }
        Some('(') => {
            let mut cycles = Vec::new();
            while cur.peek() == Some('(') {
                cycles.push(parse_cycle(cur)?);
            }
            cycles.retain(|c| !c.is_empty());
            Ok(Atom { kind: AtomKind::Cycles(cycles), offset })
        }
        Some('[') => parse_bracket(cur, offset),
        Some(c) if c.is_alphabetic() => {
            let rest = &cur.src[cur.pos..];
            let name = names
                .iter()
                .filter(|n| rest.starts_with(n.name.as_str()))
                .max_by_key(|n| n.name.len())
                .ok_or_else(|| {
                    let known: Vec<&str> = names.iter().map(|n| n.name.as_str()).collect();
                    parse_error(offset, format!("unknown generator; expected one of {}", known.join(", ")))
                })?;
            cur.pos += name.name.len();
            let arg = if name.takes_arg {
                cur.expect('(')?;
                let v = cur.int()?;
                cur.expect(')')?;
                Some(v)
            } else {
                None
            };
            Ok(Atom { kind: AtomKind::Name { name: name.name.clone(), arg }, offset })
        }
        _ => Err(cur.unexpected("expected a generator, cycle, matrix or '1'")),
    }
}

fn parse_cycle(cur: &mut Cursor<'_>) -> Result<Vec<usize>> {
    cur.expect('(')?;
    let mut pts = Vec::new();
    loop {
        cur.skip_ws();
        if cur.eat(')') {
            return Ok(pts);
        }
        if !pts.is_empty() {
            cur.eat(',');
        }
        let at = cur.at();
        let v = cur.int()?;
        if v < 1 {
            return Err(parse_error(at, "points are numbered from 1"));
        }
        pts.push(v as usize);
    }
}

fn parse_bracket(cur: &mut Cursor<'_>, offset: usize) -> Result<Atom> {
    cur.expect('[')?;
    cur.skip_ws();
    if cur.peek() == Some('[') {
        let mut m = [0i64; 4];
        for row in 0..2 {
            if row == 1 {
                cur.expect(',')?;
            }
            cur.expect('[')?;
            m[2 * row] = cur.int()?;
            cur.expect(',')?;
            m[2 * row + 1] = cur.int()?;
            cur.expect(']')?;
        }
        cur.expect(']')?;
        return Ok(Atom { kind: AtomKind::Matrix(m), offset });
    }
    let mut entries = Vec::new();
    let mut depth = 0usize;
    let mut start = cur.pos;
    loop {
        let Some(c) = cur.peek() else {
            return Err(cur.unexpected("expected ']'"));
        };
        match c {
            '[' | '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ']' if depth > 0 => depth -= 1,
            ',' | ']' if depth == 0 => {
                entries.push((cur.src[start..cur.pos].to_string(), cur.base + start));
                cur.pos += 1;
                if c == ']' {
                    return Ok(Atom { kind: AtomKind::List(entries), offset });
                }
                start = cur.pos;
                continue;
            }
            _ => {}
        }
        cur.pos += c.len_utf8();
    }
}
