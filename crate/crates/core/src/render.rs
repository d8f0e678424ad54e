//! Text and LaTeX rendering.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::chevalley::{Block, IdentitySpec, Rhs, Step, TableRow};
use crate::ring::{Coeff, DemazureCombo, Key, Monomial};
use crate::root::{Coroot, Letter, Weight};
use crate::weyl::WeylElt;

/// A reduced word such as `s1s2s1`, or `e`.
pub fn word(w: &WeylElt) -> String {
    let rw = w.reduced_word();
    if rw.is_empty() {
        return "e".into();
    }
    rw.iter().map(|i| alloc::format!("s{i}")).collect()
}

pub fn word_latex(w: &WeylElt) -> String {
    let rw = w.reduced_word();
    if rw.is_empty() {
        return "e".into();
    }
    rw.iter().map(|i| alloc::format!("s_{{{i}}}")).collect()
}

fn linear(coords: &[i32], atom: impl Fn(usize) -> String) -> String {
    let mut s = String::new();
    for (i, &v) in coords.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if v < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if v.abs() != 1 {
            let _ = write!(s, "{}", v.abs());
        }
        s.push_str(&atom(i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// A coroot in simple-coroot coordinates, e.g. `α1^∨+α2^∨` or `0`.
pub fn coroot(xi: &Coroot) -> String {
    linear(&xi.alpha_coords()[..xi.rank()], |i| alloc::format!("α{i}^∨"))
}

pub fn coroot_latex(xi: &Coroot) -> String {
    linear(&xi.alpha_coords()[..xi.rank()], |i| alloc::format!("\\alpha_{{{i}}}^{{\\vee}}"))
}

pub fn weight_latex(v: &Weight) -> String {
    linear(v.coords(), |i| alloc::format!("\\varepsilon_{{{i}}}"))
}

pub fn letter_latex(c: Letter) -> String {
    if c.is_barred() {
        alloc::format!("\\overline{{{}}}", c.index())
    } else {
        alloc::format!("{}", c.index())
    }
}

fn monomial_latex(m: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    if m.q != 0 {
        parts.push(if m.q == 1 { "q".into() } else { alloc::format!("q^{{{}}}", m.q) });
    }
    for (i, &b) in m.x[..m.rank()].iter().enumerate() {
        match b {
            0 => {}
            1 => parts.push(alloc::format!("x_{{{}}}", i + 1)),
            _ => parts.push(alloc::format!("x_{{{}}}^{{{}}}", i + 1, b)),
        }
    }
    let nu = m.weight();
    if !nu.is_zero() {
        parts.push(alloc::format!("e^{{{}}}", weight_latex(&nu)));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn coeff_latex(c: &Coeff) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (m, &v)) in c.terms().enumerate() {
        let body = monomial_latex(m);
        if v < 0 {
            s.push_str(if idx == 0 { "-" } else { " - " });
        } else if idx > 0 {
            s.push_str(" + ");
        }
        match (v.unsigned_abs(), body.as_str()) {
            (1, _) => s.push_str(&body),
            (a, "1") => {
                let _ = write!(s, "{a}");
            }
            (a, _) => {
                let _ = write!(s, "{a} {body}");
            }
        }
    }
    s
}

pub fn key_latex(k: &Key) -> String {
    let mut s = alloc::format!("V_{{{}}}^{{-}}(\\lambda", word_latex(&k.y));
    if !k.mu.is_zero() {
        let mu = weight_latex(&k.mu);
        if !mu.starts_with('-') {
            s.push('+');
        }
        s.push_str(&mu);
    }
    s.push(')');
    s
}

/// One line per key, sorted by key.
pub fn combo_text(c: &DemazureCombo) -> String {
    alloc::format!("{c}")
}

/// An `align*` body with one line per key, sorted by key.
pub fn combo_latex(c: &DemazureCombo) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut lines = Vec::new();
    for (k, v) in c.iter() {
        let coeff = if v.is_polynomial() {
            coeff_latex(v.numerator())
        } else {
            alloc::format!("\\frac{{{}}}{{{}}}", coeff_latex(v.numerator()), coeff_latex(&v.denominator().product()))
        };
        lines.push(alloc::format!("&+ \\left({coeff}\\right) {}", key_latex(k)));
    }
    lines.join(" \\\\\n")
}

/// Left-hand side of an identity, e.g. `e^{-s3s2·ε2} V[s3s2](λ)`.
pub fn spec_title(spec: &IdentitySpec) -> String {
    let sign = if spec.letter().is_barred() { "-" } else { "" };
    let w = word(&spec.x.w);
    let mut s = alloc::format!("e^{{{sign}{w}·ε{}}} V[{w}", spec.m);
    if !spec.x.xi.is_zero() {
        let _ = write!(s, " t({})", coroot(&spec.x.xi));
    }
    s.push_str("](λ)");
    s
}

/// Labels of the table rows a block's history passes through.
pub fn history_labels(rows: &[TableRow], w: &WeylElt, from: Letter, history: &[Step]) -> Vec<Option<usize>> {
    let mut base = *w;
    let mut c = from;
    let mut out = Vec::new();
    for step in history {
        let row = rows
            .iter()
            .find(|r| r.base == base && r.from == c && r.to == step.to && r.positions == step.positions);
        out.push(row.map(|r| r.label));
        if let Some(r) = row {
            base = r.ed;
        }
        c = step.to;
    }
    out
}

fn exponent_text(b: &Block, total: &Coroot) -> Option<String> {
    if total.is_zero() {
        return None;
    }
    let sign = if b.letter.is_barred() { "-" } else { "" };
    Some(alloc::format!("q^{{{sign}<ε{},{}>}}", b.letter.index(), coroot(total)))
}

/// `± q^{<ε_j, D>} Σ_{B ∈ A(y, Γ_j(j))} (-1)^{|B|} V[ed(B) t(down(B)+D)](λ+ε_j)`.
pub fn block_text(b: &Block, xi: &Coroot) -> String {
    let total = b.shift + *xi;
    let mut s = String::from(if b.sign < 0 { "- " } else { "+ " });
    if b.sign.abs() != 1 {
        let _ = write!(s, "{} ", b.sign.abs());
    }
    if let Some(e) = exponent_text(b, &total) {
        s.push_str(&e);
        s.push(' ');
    }
    let j = b.letter.index();
    let chain = if b.letter.is_barred() {
        alloc::format!("Θ_{j}")
    } else {
        alloc::format!("Γ_{j}({j})")
    };
    let shift = if total.is_zero() {
        String::from("down(B)")
    } else {
        alloc::format!("down(B)+{}", coroot(&total))
    };
    let pm = if b.letter.is_barred() { '-' } else { '+' };
    let _ = write!(s, "Σ_{{B∈A({},{chain})}} (-1)^{{|B|}} V[ed(B) t({shift})](λ{pm}ε{j})", word(&b.start));
    s
}

pub fn block_latex(b: &Block, xi: &Coroot) -> String {
    let total = b.shift + *xi;
    let mut s = String::from(if b.sign < 0 { "- " } else { "+ " });
    if b.sign.abs() != 1 {
        let _ = write!(s, "{} ", b.sign.abs());
    }
    let j = b.letter.index();
    if !total.is_zero() {
        let sign = if b.letter.is_barred() { "-" } else { "" };
        let _ = write!(s, "q^{{{sign}\\langle \\varepsilon_{{{j}}}, {} \\rangle}} ", coroot_latex(&total));
    }
    let chain = if b.letter.is_barred() {
        alloc::format!("\\Theta_{{{j}}}")
    } else {
        alloc::format!("\\Gamma_{{{j}}}({j})")
    };
    let shift = if total.is_zero() {
        String::from("\\mathrm{down}(B)")
    } else {
        alloc::format!("\\mathrm{{down}}(B)+{}", coroot_latex(&total))
    };
    let pm = if b.letter.is_barred() { '-' } else { '+' };
    let _ = write!(
        s,
        "\\sum_{{B \\in \\mathcal{{A}}({}, {chain})}} (-1)^{{|B|}} V_{{\\mathrm{{ed}}(B) t_{{{shift}}}}}^{{-}}(\\lambda {pm} \\varepsilon_{{{j}}})",
        word_latex(&b.start)
    );
    s
}

fn history_text(labels: &[Option<usize>]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .map(|l| l.map_or_else(|| String::from("?"), |v| alloc::format!("A{v}")))
        .collect();
    match parts.len() {
        0 => String::new(),
        1 => alloc::format!("  [{}]", parts[0]),
        _ => alloc::format!("  [({})]", parts.join(",")),
    }
}

/// The blocks of a right-hand side, one per line, each tagged with the
/// labels of its chained sets when `rows` is given.
pub fn rhs_text(rhs: &Rhs, blocks: &[Block], rows: Option<&[TableRow]>) -> String {
    let mut s = alloc::format!("{} =\n", spec_title(&rhs.spec));
    for b in blocks {
        s.push_str("  ");
        s.push_str(&block_text(b, &rhs.spec.x.xi));
        if let Some(rows) = rows {
            s.push_str(&history_text(&history_labels(rows, &rhs.spec.x.w, rhs.spec.letter(), &b.history)));
        }
        s.push('\n');
    }
    s
}

pub fn rhs_latex(rhs: &Rhs, blocks: &[Block]) -> String {
    let spec = &rhs.spec;
    let sign = if spec.letter().is_barred() { "-" } else { "" };
    let mut s = alloc::format!(
        "\\begin{{align*}}\n& e^{{{sign}{} \\varepsilon_{{{}}}}} V_{{{}}}^{{-}}(\\lambda)",
        word_latex(&spec.x.w),
        spec.m,
        word_latex(&spec.x.w)
    );
    if !spec.x.xi.is_zero() {
        let _ = write!(s, " \\quad (\\xi = {})", coroot_latex(&spec.x.xi));
    }
    for (i, b) in blocks.iter().enumerate() {
        let lead = if i == 0 { "&= " } else { "& \\quad " };
        let _ = write!(s, " \\\\\n{lead}{}", block_latex(b, &spec.x.xi));
    }
    s.push_str("\n\\end{align*}\n");
    s
}

fn positions_text(p: &[usize]) -> String {
    let inner: Vec<String> = p.iter().map(|v| alloc::format!("{v}")).collect();
    alloc::format!("{{{}}}", inner.join(","))
}

/// One row per labelled set: label, set, base, letters, `ed` and `down`.
pub fn table_text(rows: &[TableRow]) -> String {
    let mut s = String::from("A\tset\tw\tfrom\tto\ted\tdown\n");
    for r in rows {
        let _ = writeln!(
            s,
            "A{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.label,
            positions_text(&r.positions),
            word(&r.base),
            r.from,
            r.to,
            word(&r.ed),
            coroot(&r.down)
        );
    }
    s
}

pub fn table_latex(rows: &[TableRow]) -> String {
    let mut s = String::from(
        "\\begin{tabular}{|c|c||c|c|} \\hline\n$A$ & set & $\\mathrm{ed}(A)$ & $\\mathrm{down}(A)$ \\\\ \\hline\n",
    );
    for r in rows {
        let _ = writeln!(
            s,
            "$A_{{{}}} \\in \\mathcal{{A}}_{{{}}}^{{{}, {}}}$ & ${}$ & ${}$ & ${}$ \\\\",
            r.label,
            word_latex(&r.base),
            letter_latex(r.from),
            letter_latex(r.to),
            positions_text(&r.positions).replace('{', "\\{").replace('}', "\\}"),
            word_latex(&r.ed),
            coroot_latex(&r.down)
        );
    }
    s.push_str("\\hline\n\\end{tabular}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_coroots() {
        let w = WeylElt::parse(3, "s2 s3 s1 s2").unwrap();
        assert_eq!(word(&w), "s2s3s1s2");
        assert_eq!(word_latex(&w), "s_{2}s_{3}s_{1}s_{2}");
        assert_eq!(word(&WeylElt::identity(3)), "e");
        let xi = Coroot::from_alpha_coords(&[1, 0, -2]);
        assert_eq!(coroot(&xi), "α1^∨-2α3^∨");
        assert_eq!(coroot_latex(&xi), "\\alpha_{1}^{\\vee}-2\\alpha_{3}^{\\vee}");
        assert_eq!(coroot(&Coroot::zero(2)), "0");
        assert_eq!(letter_latex(Letter::barred(2)), "\\overline{2}");
    }

    #[test]
    fn coefficients() {
        let mut m = Monomial::q_pow(2, -1);
        m.x[1] = 2;
        let mut c = Coeff::term(m, -3);
        c.add_term(Monomial::one(2), 1);
        assert_eq!(coeff_latex(&c), "-3 q^{-1} x_{2}^{2} + 1");
        let k = Key::new(WeylElt::simple(2, 1), -Weight::unit(2, 2));
        assert_eq!(key_latex(&k), "V_{s_{1}}^{-}(\\lambda-\\varepsilon_{2})");
    }
}
