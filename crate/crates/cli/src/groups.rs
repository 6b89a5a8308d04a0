//! Group-spec strings and the element vocabulary of each group model.
//!
//! ```text
//! cyclic:<n>            Z_n, generator h
//! sl2:<p>[^<f>]         SL(2, p^f), matrices [[a,b],[c,d]] or b, w
//! psl2:<p>[^<f>]        PSL(2, p^f), as SL(2, p^f) modulo ±1
//! quaternion:<4m>       Q_{4m}, generators x, y
//! agl1:<p>^<d>:<ell>    GF(p^d)⁺ : ⟨h⟩ with |h| = ell; h, x = t(1), t(β)
//! wreath:a5:<k>         A₅ ≀ Z_k; shift g, s and t in coordinate 0,
//!                       coordinate lists [a₁, …, a_k]
//! sigmal2:<r>           ΣL(2, 2^r); phi and matrices
//! perm:<n>:<c>;<c>…     permutation group on 1..n; cycles, g1, g2, …
//! ```
//!
//! Matrix entries `0 ≤ v < q` name field elements by their digit encoding
//! (the residue itself when `f = 1`); `−v` is the negative of `v`.

use crate::words::{parse_error, parse_word, AtomKind, Factor, Name};
use dessins::constructions::a5_with_generators;
use dessins::covering::multi_edge_subgroup;
use dessins::dessin::RegularDessin;
use dessins::field::FiniteField;
use dessins::group::{
    enumerate, group_order, normal_closure, quotient_group, AffineGroup, Cyclic, Group, Mat2, NormalSubgroup, Perm,
    PermGroup, Quaternion, Quotient, SigmaL2, Sl2, Wreath,
};
use dessins::numthy::is_prime;
use dessins::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic { n: u64 },
    Sl2 { p: u32, f: u32 },
    Psl2 { p: u32, f: u32 },
    Quaternion { order: u64 },
    Agl1 { p: u32, d: u32, ell: u64 },
    WreathA5 { k: u32 },
    SigmaL2 { r: u32 },
    /// Generators as 1-based disjoint cycles.
    Perm { degree: usize, gens: Vec<Vec<Vec<usize>>> },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = |p: &u32, e: &u32| if *e == 1 { p.to_string() } else { format!("{p}^{e}") };
        match self {
            GroupSpec::Cyclic { n } => write!(f, "cyclic:{n}"),
            GroupSpec::Sl2 { p, f: e } => write!(f, "sl2:{}", field(p, e)),
            GroupSpec::Psl2 { p, f: e } => write!(f, "psl2:{}", field(p, e)),
            GroupSpec::Quaternion { order } => write!(f, "quaternion:{order}"),
            GroupSpec::Agl1 { p, d, ell } => write!(f, "agl1:{p}^{d}:{ell}"),
            GroupSpec::WreathA5 { k } => write!(f, "wreath:a5:{k}"),
            GroupSpec::SigmaL2 { r } => write!(f, "sigmal2:{r}"),
            GroupSpec::Perm { degree, gens } => {
                let gens: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            return "()".to_string();
                        }
                        cycles
                            .iter()
                            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                            .collect()
                    })
                    .collect();
                write!(f, "perm:{degree}:{}", gens.join(";"))
            }
        }
    }
}

/// A `:`-separated field of a group spec with its byte offset.
#[derive(Clone, Copy)]
struct Field<'a> {
    text: &'a str,
    offset: usize,
}

impl<'a> Field<'a> {
    fn uint<T: std::str::FromStr>(&self, what: &str) -> Result<T> {
        if self.text.is_empty() || !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(self.offset, format!("expected {what} as a decimal integer, found '{}'", self.text)));
        }
        self.text.parse().map_err(|_| parse_error(self.offset, format!("{what} is out of range")))
    }

    /// `<a>[^<b>]`.
    fn power(&self, what: &str, exp_required: bool) -> Result<(Field<'a>, Option<Field<'a>>)> {
        match self.text.find('^') {
            Some(i) => Ok((
                Field { text: &self.text[..i], offset: self.offset },
                Some(Field { text: &self.text[i + 1..], offset: self.offset + i + 1 }),
            )),
            None if exp_required => Err(parse_error(self.offset + self.text.len(), format!("expected '^' in {what}"))),
            None => Ok((*self, None)),
        }
    }
}

fn fields(s: &str, limit: usize) -> Vec<Field<'_>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (i, part) in s.splitn(limit, ':').enumerate() {
        if i > 0 {
            offset += 1;
        }
        out.push(Field { text: part, offset });
        offset += part.len();
    }
    out
}

fn expect_fields(s: &str, fs: &[Field<'_>], n: usize, shape: &str) -> Result<()> {
    if fs.len() != n {
        let offset = fs.get(n).map_or(s.len(), |f| f.offset - 1);
        return Err(parse_error(offset, format!("expected {shape}")));
    }
    Ok(())
}

fn prime(f: &Field<'_>) -> Result<u32> {
    let p: u32 = f.uint("a prime")?;
    if !is_prime(p as u64) {
        return Err(parse_error(f.offset, format!("{p} is not prime")));
    }
    Ok(p)
}

fn positive<T: std::str::FromStr + PartialOrd + From<u8>>(f: &Field<'_>, what: &str) -> Result<T> {
    let v: T = f.uint(what)?;
    if v < T::from(1) {
        return Err(parse_error(f.offset, format!("{what} must be positive")));
    }
    Ok(v)
}

fn prime_power(f: &Field<'_>) -> Result<(u32, u32)> {
    let (p, e) = f.power("a prime power", false)?;
    let p = prime(&p)?;
    let e = match e {
        Some(e) => positive::<u32>(&e, "the exponent")?,
        None => 1,
    };
    if (p as u64).checked_pow(e).is_none_or(|q| q > u32::MAX as u64 / 2) {
        return Err(parse_error(f.offset, "field is too large"));
    }
    Ok((p, e))
}

pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let fs = fields(s, 3);
    let kind = fs[0].text;
    match kind {
        "cyclic" => {
            expect_fields(s, &fs, 2, "cyclic:<n>")?;
            Ok(GroupSpec::Cyclic { n: positive(&fs[1], "n")? })
        }
        "sl2" | "psl2" => {
            expect_fields(s, &fs, 2, &format!("{kind}:<p>[^<f>]"))?;
            let (p, f) = prime_power(&fs[1])?;
            Ok(if kind == "sl2" { GroupSpec::Sl2 { p, f } } else { GroupSpec::Psl2 { p, f } })
        }
        "quaternion" => {
            expect_fields(s, &fs, 2, "quaternion:<4m>")?;
            let order: u64 = positive(&fs[1], "the order")?;
            if !order.is_multiple_of(4) {
                return Err(parse_error(fs[1].offset, format!("quaternion order {order} is not a multiple of 4")));
            }
            Ok(GroupSpec::Quaternion { order })
        }
        "agl1" => {
            expect_fields(s, &fs, 3, "agl1:<p>^<d>:<ell>")?;
            let (p, d) = fs[1].power("agl1:<p>^<d>", true)?;
            let (p, d) = (prime(&p)?, positive::<u32>(&d.expect("required"), "d")?);
            let ell: u64 = positive(&fs[2], "ell")?;
            let q = (p as u64).checked_pow(d).filter(|&q| q <= 1 << 24);
            let Some(q) = q else {
                return Err(parse_error(fs[1].offset, "field is too large"));
            };
            if (q - 1) % ell != 0 {
                return Err(parse_error(fs[2].offset, format!("{ell} does not divide {}", q - 1)));
            }
            Ok(GroupSpec::Agl1 { p, d, ell })
        }
        "wreath" => {
            expect_fields(s, &fs, 3, "wreath:a5:<k>")?;
            if fs[1].text != "a5" {
                return Err(parse_error(fs[1].offset, "only a5 is supported as the wreath factor"));
            }
            Ok(GroupSpec::WreathA5 { k: positive(&fs[2], "k")? })
        }
        "sigmal2" => {
            expect_fields(s, &fs, 2, "sigmal2:<r>")?;
            let r: u32 = positive(&fs[1], "r")?;
            if r > 15 {
                return Err(parse_error(fs[1].offset, "r must be at most 15"));
            }
            Ok(GroupSpec::SigmaL2 { r })
        }
        "perm" => {
            expect_fields(s, &fs, 3, "perm:<n>:<cycles>;<cycles>")?;
            let degree: usize = positive(&fs[1], "the degree")?;
            if degree > u16::MAX as usize {
                return Err(parse_error(fs[1].offset, "degree is too large"));
            }
            let mut gens = Vec::new();
            let mut offset = fs[2].offset;
            for part in fs[2].text.split(';') {
                gens.push(parse_cycles(part, offset, degree)?);
                offset += part.len() + 1;
            }
            Ok(GroupSpec::Perm { degree, gens })
        }
        _ => Err(parse_error(
            0,
            format!("unknown group model '{kind}'; expected cyclic, sl2, psl2, quaternion, agl1, wreath, sigmal2 or perm"),
        )),
    }
}

/// A permutation given purely in cycle notation, normalised to disjoint
/// 1-based cycles.
fn parse_cycles(src: &str, offset: usize, degree: usize) -> Result<Vec<Vec<usize>>> {
    let word = parse_word(src, offset, &[])?;
    let mut perm: Perm = (0..degree as u16).collect();
    for f in &word {
        let AtomKind::Cycles(cycles) = &f.atom.kind else {
            return Err(parse_error(f.atom.offset, "expected cycle notation"));
        };
        if f.exp != 1 {
            return Err(parse_error(f.atom.offset, "exponents are not allowed in generator lists"));
        }
        let p = cycles_to_perm(cycles, degree, f.atom.offset)?;
        perm = perm.iter().map(|&i| p[i as usize]).collect();
    }
    Ok(PermGroup::cycles(&perm).into_iter().map(|c| c.into_iter().map(|x| x + 1).collect()).collect())
}

fn cycles_to_perm(cycles: &[Vec<usize>], degree: usize, offset: usize) -> Result<Perm> {
    let mut out: Perm = (0..degree as u16).collect();
    for c in cycles {
        if let Some(&bad) = c.iter().find(|&&x| x > degree) {
            return Err(parse_error(offset, format!("point {bad} exceeds the degree {degree}")));
        }
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != c.len() {
            return Err(parse_error(offset, "a cycle repeats a point"));
        }
        let zero: Vec<usize> = c.iter().map(|x| x - 1).collect();
        let p = PermGroup::from_cycles(degree, &[zero]);
        out = out.iter().map(|&i| p[i as usize]).collect();
    }
    Ok(out)
}

/// A group model the command line can build elements of.
pub trait Model: Group + Sized + 'static {
    fn names(&self) -> Vec<Name>;

    /// The element denoted by a single atom (exponent not yet applied).
    fn atom(&self, kind: &AtomKind, offset: usize, cap: usize) -> Result<Self::Elem>;

    /// Membership beyond the model's own universe check.
    fn member(&self, x: &Self::Elem, _cap: usize) -> Result<bool> {
        Ok(self.contains(x))
    }

    /// Model-specific named normal subgroups.
    fn named_normal(&self, _name: &str) -> Option<NormalSubgroup<Self::Elem>> {
        None
    }
}

fn unsupported(offset: usize, model: &str) -> Error {
    parse_error(offset, format!("this kind of literal is not an element of {model}"))
}

pub fn eval_word<G: Group>(g: &G, word: &[Factor], mut atom: impl FnMut(&AtomKind, usize) -> Result<G::Elem>) -> Result<G::Elem> {
    let mut acc = g.identity();
    for f in word {
        let x = atom(&f.atom.kind, f.atom.offset)?;
        acc = g.mul(&acc, &g.pow(&x, f.exp));
    }
    Ok(acc)
}

/// Parse and evaluate an element literal.
pub fn parse_element<G: Model>(g: &G, src: &str, cap: usize) -> Result<G::Elem> {
    let word = parse_word(src, 0, &g.names())?;
    let x = eval_word(g, &word, |k, off| g.atom(k, off, cap))?;
    if !g.member(&x, cap)? {
        return Err(Error::Precondition(format!("{src} is not an element of {}", g.describe())));
    }
    Ok(x)
}

impl Model for Cyclic {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("h")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<u64> {
        match kind {
            AtomKind::One => Ok(0),
            AtomKind::Name { .. } => Ok(self.h(1)),
            _ => Err(unsupported(offset, "a cyclic group")),
        }
    }
}

impl Model for Quaternion {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("x"), Name::plain("y")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Self::Elem> {
        match kind {
            AtomKind::One => Ok(self.identity()),
            AtomKind::Name { name, .. } if name == "x" => Ok(self.x()),
            AtomKind::Name { .. } => Ok(self.y()),
            _ => Err(unsupported(offset, "a quaternion group")),
        }
    }

    fn named_normal(&self, name: &str) -> Option<NormalSubgroup<Self::Elem>> {
        (name == "center").then(|| NormalSubgroup::from_trusted_elements("center", self.center_elements()))
    }
}

fn matrix(field: &FiniteField, m: &[i64; 4], offset: usize) -> Result<Mat2> {
    let q = field.order() as i64;
    let mut out = [0u32; 4];
    for (o, &v) in out.iter_mut().zip(m) {
        if v.abs() >= q {
            return Err(parse_error(offset, format!("matrix entry {v} is not an element of GF({q})")));
        }
        let e = v.unsigned_abs() as u32;
        *o = if v < 0 { field.neg(e) } else { e };
    }
    Ok(out)
}

fn sl2_atom(sl: &Sl2, kind: &AtomKind, offset: usize, model: &str) -> Result<Mat2> {
    let m = match kind {
        AtomKind::One => sl.identity(),
        AtomKind::Matrix(m) => matrix(sl.field(), m, offset)?,
        AtomKind::Name { name, .. } => {
            let (b, w) = sl.standard_pair();
            if name == "b" {
                b
            } else {
                w
            }
        }
        _ => return Err(unsupported(offset, model)),
    };
    if !sl.contains(&m) {
        return Err(Error::Precondition(format!("{} does not have determinant 1", sl.fmt_elem(&m))));
    }
    Ok(m)
}

impl Model for Sl2 {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("b"), Name::plain("w")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Mat2> {
        sl2_atom(self, kind, offset, "SL(2,q)")
    }

    fn named_normal(&self, name: &str) -> Option<NormalSubgroup<Mat2>> {
        (name == "center").then(|| self.center())
    }
}

impl Model for Quotient<Sl2> {
    fn names(&self) -> Vec<Name> {
        self.parent().names()
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Mat2> {
        Ok(self.project(&sl2_atom(self.parent(), kind, offset, "PSL(2,q)")?))
    }
}

impl Model for AffineGroup {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("h"), Name::plain("x"), Name::with_arg("t"), Name::plain("phi")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Self::Elem> {
        match kind {
            AtomKind::One => Ok(self.identity()),
            AtomKind::Name { name, arg } => match name.as_str() {
                "h" => Ok(self.h(1)),
                "x" => Ok(self.translation(1)),
                "phi" => Err(parse_error(offset, "agl1 models carry no Frobenius")),
                _ => {
                    let v = arg.expect("t takes an argument");
                    let field = self.field();
                    if v < 0 || !field.contains(v as u32) {
                        return Err(parse_error(offset, format!("{v} is not an element of GF({})", field.order())));
                    }
                    Ok(self.translation(v as u32))
                }
            },
            _ => Err(unsupported(offset, "an affine group")),
        }
    }

    fn named_normal(&self, name: &str) -> Option<NormalSubgroup<Self::Elem>> {
        (name == "translations").then(|| self.translations())
    }
}

fn a5_atom(a5: &PermGroup, s: &Perm, t: &Perm, kind: &AtomKind, offset: usize) -> Result<Perm> {
    match kind {
        AtomKind::One => Ok(a5.identity()),
        AtomKind::Name { name, .. } if name == "s" => Ok(s.clone()),
        AtomKind::Name { name, .. } if name == "t" => Ok(t.clone()),
        AtomKind::Cycles(c) => {
            let p = cycles_to_perm(c, 5, offset)?;
            if !is_even(&p) {
                return Err(Error::Precondition(format!("{} is not in A5", a5.fmt_elem(&p))));
            }
            Ok(p)
        }
        _ => Err(unsupported(offset, "A5")),
    }
}

fn is_even(p: &Perm) -> bool {
    PermGroup::cycles(p).iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
}

impl Model for Wreath<PermGroup> {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("g"), Name::plain("s"), Name::plain("t")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Self::Elem> {
        let (a5, s, t) = a5_with_generators();
        let coord0 = |x: Perm| {
            let mut c = vec![a5.identity(); self.k() as usize];
            c[0] = x;
            self.base(c)
        };
        match kind {
            AtomKind::Name { name, .. } if name == "g" => Ok(self.g()),
            AtomKind::Name { .. } | AtomKind::One | AtomKind::Cycles(_) => {
                Ok(coord0(a5_atom(&a5, &s, &t, kind, offset)?))
            }
            AtomKind::List(entries) => {
                if entries.len() != self.k() as usize {
                    return Err(parse_error(offset, format!("expected {} coordinates, found {}", self.k(), entries.len())));
                }
                let names = [Name::plain("s"), Name::plain("t")];
                let coords = entries
                    .iter()
                    .map(|(src, base)| {
                        let word = parse_word(src, *base, &names)?;
                        eval_word(&a5, &word, |k, off| a5_atom(&a5, &s, &t, k, off))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.base(coords))
            }
            AtomKind::Matrix(_) => Err(unsupported(offset, "A5 ≀ Z_k")),
        }
    }

    fn named_normal(&self, name: &str) -> Option<NormalSubgroup<Self::Elem>> {
        (name == "base").then(|| self.base_subgroup())
    }
}

impl Model for SigmaL2 {
    fn names(&self) -> Vec<Name> {
        vec![Name::plain("phi"), Name::plain("b"), Name::plain("w")]
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Self::Elem> {
        match kind {
            AtomKind::Name { name, .. } if name == "phi" => Ok(self.phi()),
            _ => Ok(self.embed(sl2_atom(self.sl(), kind, offset, "ΣL(2,q)")?)),
        }
    }
}

impl Model for PermGroup {
    fn names(&self) -> Vec<Name> {
        (1..=self.generators().len()).map(|i| Name::plain(&format!("g{i}"))).collect()
    }

    fn atom(&self, kind: &AtomKind, offset: usize, _cap: usize) -> Result<Perm> {
        match kind {
            AtomKind::One => Ok(self.identity()),
            AtomKind::Cycles(c) => cycles_to_perm(c, self.degree(), offset),
            AtomKind::Name { name, .. } => {
                let i: usize = name[1..].parse().expect("generator names are g<i>");
                Ok(self.generators()[i - 1].clone())
            }
            _ => Err(unsupported(offset, "a permutation group")),
        }
    }

    /// Cycle literals may leave the group, so membership is settled by
    /// enumeration.
    fn member(&self, x: &Perm, cap: usize) -> Result<bool> {
        Ok(self.contains(x) && enumerate(self, cap)?.contains(x))
    }
}

/// A built group model.
pub enum AnyGroup {
    Cyclic(Arc<Cyclic>),
    Sl2(Arc<Sl2>),
    Psl2(Arc<Quotient<Sl2>>),
    Quaternion(Arc<Quaternion>),
    Affine(Arc<AffineGroup>),
    Wreath(Arc<Wreath<PermGroup>>),
    SigmaL2(Arc<SigmaL2>),
    Perm(Arc<PermGroup>),
}

/// Run `$body` with `$g` bound to the concrete `Arc` of the model.
#[macro_export]
macro_rules! with_model {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::groups::AnyGroup::Cyclic($g) => $body,
            $crate::groups::AnyGroup::Sl2($g) => $body,
            $crate::groups::AnyGroup::Psl2($g) => $body,
            $crate::groups::AnyGroup::Quaternion($g) => $body,
            $crate::groups::AnyGroup::Affine($g) => $body,
            $crate::groups::AnyGroup::Wreath($g) => $body,
            $crate::groups::AnyGroup::SigmaL2($g) => $body,
            $crate::groups::AnyGroup::Perm($g) => $body,
        }
    };
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> Result<AnyGroup> {
        Ok(match *self {
            GroupSpec::Cyclic { n } => AnyGroup::Cyclic(Arc::new(Cyclic::new(n))),
            GroupSpec::Sl2 { p, f } => AnyGroup::Sl2(Arc::new(Sl2::new(FiniteField::new(p, f)?))),
            GroupSpec::Psl2 { p, f } => {
                let sl = Sl2::new(FiniteField::new(p, f)?);
                AnyGroup::Psl2(Arc::new(quotient_group(&sl, &sl.center())?))
            }
            GroupSpec::Quaternion { order } => AnyGroup::Quaternion(Arc::new(Quaternion::new(order / 4)?)),
            GroupSpec::Agl1 { p, d, ell } => {
                AnyGroup::Affine(Arc::new(AffineGroup::new(FiniteField::new(p, d)?, ell, false)?))
            }
            GroupSpec::WreathA5 { k } => AnyGroup::Wreath(Arc::new(Wreath::new(a5_with_generators().0, k)?)),
            GroupSpec::SigmaL2 { r } => AnyGroup::SigmaL2(Arc::new(SigmaL2::new(FiniteField::new(2, r)?))),
            GroupSpec::Perm { degree, ref gens } => {
                let gens = gens
                    .iter()
                    .map(|c| {
                        let zero: Vec<Vec<usize>> = c.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                        PermGroup::from_cycles(degree, &zero)
                    })
                    .collect();
                let g = PermGroup::new(degree, gens);
                let order = group_order(&g, cap)?;
                AnyGroup::Perm(Arc::new(g.with_order(order)))
            }
        })
    }
}

/// The normal subgroup named by `--by`: a model-specific name, `center`,
/// `trivial`, `whole`, `multi-edge`, or `closure:<element>`.
pub fn normal_by<G: Model>(d: &RegularDessin<G>, by: &str, cap: usize) -> Result<NormalSubgroup<G::Elem>> {
    let g = d.group().as_ref();
    if let Some(n) = g.named_normal(by) {
        return Ok(n);
    }
    match by {
        "center" => {
            let gens = g.generators();
            let elems: Vec<G::Elem> = enumerate(g, cap)?
                .into_iter()
                .filter(|z| gens.iter().all(|s| g.mul(z, s) == g.mul(s, z)))
                .collect();
            Ok(NormalSubgroup::from_trusted_elements("center", elems))
        }
        "trivial" => Ok(NormalSubgroup::trivial(g)),
        "whole" => NormalSubgroup::whole(g, cap),
        "multi-edge" => Ok(multi_edge_subgroup(d)),
        _ => match by.strip_prefix("closure:") {
            Some(src) => {
                let word = parse_word(src, "closure:".len(), &g.names())?;
                let x = eval_word(g, &word, |k, off| g.atom(k, off, cap))?;
                if !g.member(&x, cap)? {
                    return Err(Error::Precondition(format!("{src} is not an element of {}", g.describe())));
                }
                normal_closure(g, &[x], cap)
            }
            None => Err(parse_error(
                0,
                format!("unknown subgroup '{by}'; expected center, trivial, whole, multi-edge, closure:<element> or a model-specific name (translations, base)"),
            )),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn offset(s: &str) -> usize {
        match parse_group_spec(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        }
    }

    #[test]
    fn examples_parse() {
        assert_eq!(parse_group_spec("cyclic:12").unwrap(), GroupSpec::Cyclic { n: 12 });
        assert_eq!(parse_group_spec("sl2:13").unwrap(), GroupSpec::Sl2 { p: 13, f: 1 });
        assert_eq!(parse_group_spec("psl2:3^2").unwrap(), GroupSpec::Psl2 { p: 3, f: 2 });
        assert_eq!(parse_group_spec("agl1:2^2:3").unwrap(), GroupSpec::Agl1 { p: 2, d: 2, ell: 3 });
        assert_eq!(parse_group_spec("quaternion:8").unwrap(), GroupSpec::Quaternion { order: 8 });
        assert_eq!(parse_group_spec("wreath:a5:5").unwrap(), GroupSpec::WreathA5 { k: 5 });
        assert_eq!(parse_group_spec("sigmal2:5").unwrap(), GroupSpec::SigmaL2 { r: 5 });
        assert_eq!(
            parse_group_spec("perm:4:(1 2 3 4);(2,1)").unwrap(),
            GroupSpec::Perm { degree: 4, gens: vec![vec![vec![1, 2, 3, 4]], vec![vec![1, 2]]] }
        );
    }

    #[test]
    fn errors_point_at_the_offending_field() {
        assert_eq!(offset("torus:3"), 0);
        assert_eq!(offset("cyclic:x"), 7);
        assert_eq!(offset("cyclic:0"), 7);
        assert_eq!(offset("cyclic:3:4"), 8);
        assert_eq!(offset("sl2:12"), 4);
        assert_eq!(offset("sl2:13^0"), 7);
        assert_eq!(offset("quaternion:6"), 11);
        assert_eq!(offset("agl1:4:3"), 6);
        assert_eq!(offset("agl1:2^2:5"), 9);
        assert_eq!(offset("wreath:s5:5"), 7);
        assert_eq!(offset("perm:3:(1,2);(1,4)"), 13);
        assert_eq!(offset("perm:3:(1,2);x"), 13);
    }

    #[test]
    fn canonical_format_round_trips() {
        for s in ["cyclic:12", "sl2:13", "sl2:3^2", "psl2:7", "quaternion:8", "agl1:2^2:3", "wreath:a5:5", "sigmal2:5", "perm:5:(1,2,3,4,5);(1,2)(3,4)"] {
            let spec = parse_group_spec(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let spec = parse_group_spec("sl2:13^1").unwrap();
        assert_eq!(spec.to_string(), "sl2:13");
        let spec = parse_group_spec("perm:4:(2 1)(3,4);()").unwrap();
        assert_eq!(spec.to_string(), "perm:4:(1,2)(3,4);()");
    }

    /// Every element's printed form parses back to itself.
    fn round_trip<G: Model>(g: &G) {
        for x in enumerate(g, 100_000).unwrap() {
            let s = g.fmt_elem(&x);
            assert_eq!(parse_element(g, &s, 100_000).unwrap(), x, "{} in {}", s, g.describe());
        }
    }

    #[test]
    fn printed_elements_parse_back() {
        for s in ["cyclic:12", "quaternion:12", "sl2:5", "sl2:3^2", "psl2:7", "agl1:2^3:7", "agl1:3^2:8", "perm:5:(1,2,3);(3,4,5)", "sigmal2:2"] {
            let g = parse_group_spec(s).unwrap().build(100_000).unwrap();
            with_model!(g, g => round_trip(g.as_ref()));
        }
    }

    #[test]
    fn wreath_literals() {
        let AnyGroup::Wreath(g) = parse_group_spec("wreath:a5:3").unwrap().build(1000).unwrap() else {
            unreachable!()
        };
        let (_, s, t) = a5_with_generators();
        let x = parse_element(g.as_ref(), "[s, t, 1]g^2", 10).unwrap();
        assert_eq!(x, (vec![s.clone(), t.clone(), g.inner().identity()], 2));
        assert_eq!(parse_element(g.as_ref(), &g.fmt_elem(&x), 10).unwrap(), x);
        assert_eq!(parse_element(g.as_ref(), "s", 10).unwrap(), parse_element(g.as_ref(), "[(1,2,3,4,5),(),()]", 10).unwrap());
        assert!(matches!(parse_element(g.as_ref(), "[(1,2),(),()]", 10), Err(Error::Precondition(_))));
        assert!(matches!(parse_element(g.as_ref(), "[s,t]", 10), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn literal_checks() {
        let AnyGroup::Sl2(g) = parse_group_spec("sl2:7").unwrap().build(1000).unwrap() else { unreachable!() };
        assert_eq!(parse_element(g.as_ref(), "[[1,-1],[0,1]]", 10).unwrap(), [1, 6, 0, 1]);
        assert_eq!(parse_element(g.as_ref(), "b", 10).unwrap(), [1, 0, 1, 1]);
        assert!(matches!(parse_element(g.as_ref(), "[[2,0],[0,2]]", 10), Err(Error::Precondition(_))));
        assert!(matches!(parse_element(g.as_ref(), "[[7,0],[0,1]]", 10), Err(Error::Parse { offset: 0, .. })));
        let AnyGroup::Perm(g) = parse_group_spec("perm:4:(1,2,3)").unwrap().build(1000).unwrap() else { unreachable!() };
        assert!(matches!(parse_element(g.as_ref(), "(1,4)", 100), Err(Error::Precondition(_))));
        assert_eq!(parse_element(g.as_ref(), "g1^2", 100).unwrap(), parse_element(g.as_ref(), "(1,3,2)", 100).unwrap());
    }

    proptest! {
        #[test]
        fn cyclic_specs_round_trip(n in 1u64..1_000_000) {
            let s = format!("cyclic:{n}");
            prop_assert_eq!(parse_group_spec(&s).unwrap().to_string(), s);
        }

        #[test]
        fn garbage_never_panics(s in "[a-z0-9:^;(),]{0,20}") {
            let _ = parse_group_spec(&s);
        }

        #[test]
        fn quaternion_words_multiply(a in -20i64..20, e in 0i64..4, m in 2u64..8) {
            let g = Quaternion::new(m).unwrap();
            let s = format!("x^{a}*y^{e}");
            let want = g.mul(&g.pow(&g.x(), a), &g.pow(&g.y(), e));
            prop_assert_eq!(parse_element(&g, &s, 1000).unwrap(), want);
        }
    }
}
