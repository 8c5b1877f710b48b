//! Triangulations of convex polygons as balanced parenthesis words.
//!
//! The polygon `0, 1, …, m-1` is triangulated recursively: the triangle on
//! the edge `(lo, hi)` has apex `k`, and the word is `(`, the word of
//! `(lo, k)`, `)`, then the word of `(k, hi)`. A triangulation of an
//! `m`-gon thus has a word of semilength `m - 2`.

use super::ConstructionError;
use crate::complex::{Face, SimplicialComplex};

/// The Catalan number `C_n`, saturating.
pub fn catalan(n: usize) -> u128 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    (0..n).fold(1u128, |c, k| c.saturating_mul(2 * (2 * k as u128 + 1)) / (k as u128 + 2))
}

/// All balanced words of semilength `n`, in lexicographic order with `(` first.
pub fn dyck_words(n: usize) -> Vec<String> {
    fn go(open: usize, close: usize, n: usize, cur: &mut String, out: &mut Vec<String>) {
        if close == n {
            out.push(cur.clone());
            return;
        }
        if open < n {
            cur.push('(');
            go(open + 1, close, n, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(')');
            go(open, close + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

/// The triangles of the `m`-gon encoded by `word`, each sorted.
pub fn polygon_triangulation(m: usize, word: &str) -> Result<Vec<[usize; 3]>, ConstructionError> {
    let bad = ConstructionError::BadPattern { expected: 2 * m.saturating_sub(2) };
    if m < 3 || word.len() != 2 * (m - 2) {
        return Err(bad);
    }
    let bytes = word.as_bytes();
    let mut out = Vec::with_capacity(m - 2);
    fn rec(w: &[u8], lo: usize, hi: usize, out: &mut Vec<[usize; 3]>) -> bool {
        if hi - lo == 1 {
            return w.is_empty();
        }
        if w.first() != Some(&b'(') {
            return false;
        }
        let mut depth = 0i32;
        let mut close = None;
        for (i, &c) in w.iter().enumerate() {
            depth += match c {
                b'(' => 1,
                b')' => -1,
                _ => return false,
            };
            if depth == 0 {
                close = Some(i);
                break;
            }
        }
        let Some(q) = close else { return false };
        let k = lo + 1 + (q - 1) / 2;
        if k >= hi {
            return false;
        }
        out.push([lo, k, hi]);
        rec(&w[1..q], lo, k, out) && rec(&w[q + 1..], k, hi, out)
    }
    if rec(bytes, 0, m - 1, &mut out) {
        Ok(out)
    } else {
        Err(bad)
    }
}

/// Inverse of [`polygon_triangulation`].
pub fn polygon_triangulation_to_dyck(m: usize, triangles: &[[usize; 3]]) -> Option<String> {
    fn rec(tris: &[[usize; 3]], lo: usize, hi: usize, out: &mut String) -> Option<()> {
        if hi - lo == 1 {
            return Some(());
        }
        let t = tris.iter().find(|t| t[0] == lo && t[2] == hi)?;
        out.push('(');
        rec(tris, lo, t[1], out)?;
        out.push(')');
        rec(tris, t[1], hi, out)
    }
    let mut sorted: Vec<[usize; 3]> = triangles
        .iter()
        .map(|t| {
            let mut s = *t;
            s.sort_unstable();
            s
        })
        .collect();
    sorted.sort_unstable();
    let mut out = String::new();
    rec(&sorted, 0, m - 1, &mut out)?;
    (out.len() == 2 * (m - 2) && sorted.len() == m - 2).then_some(out)
}

/// Every triangulation of the convex `n`-gon on vertices `0..n`, as complexes.
pub fn convex_polygon_triangulations(n: usize) -> Vec<SimplicialComplex> {
    if n < 3 {
        return Vec::new();
    }
    dyck_words(n - 2)
        .iter()
        .map(|w| {
            let tris = polygon_triangulation(n, w).expect("generated words are valid");
            SimplicialComplex::from_facets(
                tris.iter().map(|t| Face::new(t.iter().map(|&v| v as u32).collect()).unwrap()),
            )
        })
        .collect()
}
