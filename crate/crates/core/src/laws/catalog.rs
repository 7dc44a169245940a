//! The law catalog: every law the checker knows about, with the verdict it
//! is expected to reach.

use std::sync::OnceLock;

use super::parse::parse_law_text;
use super::term::{Expected, Law, LawModel};

const V: Expected = Expected::Valid;
const R: Expected = Expected::Refuted;

use LawModel::{Algebra as ALG, Both as BOTH, Relations as REL};

type Group = (&'static str, LawModel, &'static [(&'static str, &'static str, Expected)]);

const GROUPS: &[Group] = &[
    (
        "proto-trioid",
        BOTH,
        &[
            ("join-assoc", "(x + y) + z = x + (y + z)", V),
            ("join-comm", "x + y = y + x", V),
            ("join-zero", "x + 0 = x", V),
            ("join-idem", "x + x = x", V),
            ("seq-unit-left", "1s . x = x", V),
            ("seq-unit-right", "x . 1s = x", V),
            ("seq-subdist", "x.y + x.z <= x.(y + z)", V),
            ("seq-rightdist", "(x + y).z = x.z + y.z", V),
            ("seq-zero-left", "0 . x = 0", V),
            ("par-assoc", "(x || y) || z = x || (y || z)", V),
            ("par-comm", "x || y = y || x", V),
            ("par-unit", "1p || x = x", V),
            ("par-dist", "x || (y + z) = x||y + x||z", V),
            ("par-zero", "0 || x = 0", V),
        ],
    ),
    (
        "proto-trioid",
        REL,
        &[
            ("seq-subassoc", "(x.y).z <= x.(y.z)", V),
            ("seq-zero-right", "x . 0 = 0", R),
            ("par-seq-subdist", "(x || y).z <= (x.z) || (y.z)", V),
            ("subid-leftdist", "p:sub.(y + z) = p.y + p.z", V),
        ],
    ),
    (
        "idempotence",
        REL,
        &[
            ("idemlemma-1", "p:sub || p = p", V),
            ("idemlemma-2", "t:term || t = t", V),
            ("idemlemma-3", "U || U = U", V),
            ("idemlemma-4", "n1p || n1p = n1p", V),
        ],
    ),
    (
        "seq-par interaction",
        REL,
        &[
            ("interaction-sub", "(x || y).z:sub = (x.z) || (y.z)", V),
            ("interaction-term", "(x || y).z:term = (x.z) || (y.z)", V),
            ("interaction-univ", "(x || y).U = (x.U) || (y.U)", V),
            ("interaction-conpi", "(x || y).n1p = (x.n1p) || (y.n1p)", V),
            ("interaction-5", "p:sub.(y || z) = (p.y) || (p.z)", V),
            ("assoc-sub-1", "(p:sub.y).z = p.(y.z)", V),
            ("assoc-sub-2", "(x.p:sub).z = x.(p.z)", V),
            ("assoc-sub-3", "(x.y).p:sub = x.(y.p)", V),
            ("assoc-term-1", "(t:term.y).z = t.(y.z)", V),
            ("assoc-term-2", "(x.t:term).z = x.(t.z)", V),
            ("assoc-term-3", "(x.y).t:term = x.(y.t)", V),
            ("subid-meet-seq", "(p:sub & q:sub).z = p.z & q.z", V),
        ],
    ),
    (
        "constants",
        REL,
        &[
            ("constprops-1", "x.1p = term(x)", V),
            ("constprops-2", "x & 1p = tau(x)", V),
            ("constprops-3", "x.0 = tau(x)", V),
            ("constprops-4", "x.U = tau(x) + vec(nu(x))", V),
            ("constprops-5", "x || U = up(x)", V),
            ("constprops-6", "x & 1s <= 1s", V),
        ],
    ),
    (
        "domain",
        REL,
        &[
            ("domain-def", "d(x) = (x.1p) || 1s", V),
            ("domain-vec", "d(v:vec) = v & 1s", V),
            ("domain-term", "d(t:term) = t || 1s", V),
            ("domain-relational", "d(x) = 1s & x.U", R),
        ],
    ),
    (
        "multirelational domain axioms",
        REL,
        &[
            ("mraxioms-1", "((x.1p) || 1s).y = (x.1p) || y", V),
            ("mraxioms-2", "x.1p <= 1p", V),
            ("mraxioms-3", "x.1p + x.n1p = x.U", V),
            ("mraxioms-4", "1p & (x + n1p) = x.0", V),
            ("mraxioms-5", "((x & 1s).1p) || 1s = x & 1s", V),
            ("mraxioms-6", "((x & n1p).1p) || 1s = 1s & (x & n1p).n1p", V),
            ("mraxioms-7", "((x & n1p).1p) || n1p = (x & n1p).n1p", V),
        ],
    ),
    (
        "c-monoid",
        BOTH,
        &[
            ("c1", "(x.1p) || x = x", V),
            ("c2", "((x.1p) || 1s).y = (x.1p) || y", V),
            ("c3", "(x || y).1p = (x.1p) || (y.1p)", V),
            ("c4", "(x.y).1p = x.(y.1p)", V),
            ("c5", "1s || 1s = 1s", V),
            ("retract-domain", "d(d(x)) = d(x)", V),
            ("retract-terminal", "(x.1p).1p = x.1p", V),
            ("auxdomprops-1", "d(x).y = (x.1p) || y", V),
            ("auxdomprops-2", "d(x.1p).y = (x.1p) || y", V),
            ("auxdomprops-3", "d(x).1p = x.1p", V),
            ("auxdomprops-4", "d(x.1p) = d(x)", V),
            ("auxdomprops-5", "1p.1p = 1p", V),
            ("auxdomprops-6", "d(1p) = 1s", V),
            ("dtermiso-1", "d(d(x).1p) = d(x)", V),
            ("dtermiso-2", "d(x.1p).1p = x.1p", V),
            ("domaxverif-1", "d(x || y) = d(x) || d(y)", V),
            ("domaxverif-2", "d(x) || d(y) = d(x).d(y)", V),
            ("domaxverif-3", "d(x).x = x", V),
            ("domaxverif-4", "d(x.d(y)) = d(x.y)", V),
            ("domaxverif-5", "d(d(x).y) = d(x).d(y)", V),
            ("domaxverif-6", "d(x).d(y) = d(y).d(x)", V),
            ("domaxverif-7", "d(1s) = 1s", V),
            ("domsemilat-1", "d(d(x).d(y)) = d(x).d(y)", V),
            ("domsemilat-2", "d(d(x) || d(y)) = d(x) || d(y)", V),
            ("domsemilat-3", "d(x).d(x) = d(x)", V),
            ("domsemilat-4", "(d(x).d(y)).d(z) = d(x).(d(y).d(z))", V),
            ("trianglecmon-1", "t:term || t = t", V),
            ("trianglecmon-2", "p:sub || p = p", V),
            ("trianglecmon-3", "p:sub.(x || y) = (p.x) || (p.y)", V),
        ],
    ),
    (
        "c-monoid refutations",
        ALG,
        &[
            ("domrefs-1", "(x || y).d(z) = (x.d(z)) || (y.d(z))", R),
            ("domrefs-2", "(x.y).d(z) = x.(y.d(z))", R),
            ("domrefs-3", "1p.x = 1p", R),
        ],
    ),
    (
        "c-trioid",
        BOTH,
        &[
            ("c6", "x.1p <= 1p", V),
            ("cprototrioid-1", "x <= d(x).x", V),
            ("cprototrioid-2", "d(x.d(y)) = d(x.y)", V),
            ("cprototrioid-3", "d(x || y) = d(x) || d(y)", V),
            ("cprototrioid-4", "d(x) || d(y) = d(x).d(y)", V),
            ("cprototrioid-5", "d(x + y) = d(x) + d(y)", V),
            ("cprototrioid-6", "d(x) <= 1s", V),
            ("cprototrioid-7", "d(0) = 0", V),
            ("ctrioidbdl-1", "p:sub + p.q:sub = p", V),
            ("ctrioidbdl-2", "p:sub.(p + q:sub) = p", V),
            ("ctrioidbdl-3", "(p:sub + q:sub).r:sub = p.r + q.r", V),
            ("ctrioidbdl-4", "p:sub + q:sub.r:sub = (p + q).(p + r)", V),
            ("ctrioidprops-1", "r:sub <= p:sub, r <= q:sub => r <= p.q", V),
            ("ctrioidprops-2", "r:sub <= p:sub.q:sub => r <= p", V),
            ("ctrioidprops-3", "r:sub <= p:sub.q:sub => r <= q", V),
            ("ctrioidprops-4", "r:term <= s:term, r <= t:term => r <= s || t", V),
            ("ctrioidprops-5", "r:term <= s:term || t:term => r <= s", V),
            ("ctrioidprops-6", "r:term <= s:term || t:term => r <= t", V),
        ],
    ),
    (
        "c-trioid refutations",
        ALG,
        &[
            ("ctrioidcounter1-1", "(x || y).d(z) = (x.d(z)) || (y.d(z))", R),
            ("ctrioidcounter1-2", "(x.y).d(z) = x.(y.d(z))", R),
            ("ctrioidcounter1-3", "dia(x.y, p) = dia(x, dia(y, p))", R),
            ("ctrioidcounter1-4", "dia(x || y, p) = dia(x, p).dia(y, p)", R),
        ],
    ),
    (
        "strong c-trioid",
        REL,
        &[
            ("strong-1", "(x || y).p:sub = (x.p) || (y.p)", V),
            ("strong-2", "(p:sub.x).y = p.(x.y)", V),
            ("strong-3", "(x.p:sub).y = x.(p.y)", V),
            ("strong-4", "(x.y).p:sub = x.(y.p)", V),
            ("strong-kleene-1", "1s + x.x^* <= x^*", V),
            ("strong-kleene-2", "p:sub + x.y <= y => x^*.p <= y", V),
        ],
    ),
    (
        "diamond",
        REL,
        &[
            ("cda-1", "dia(x + y, p) = dia(x, p) + dia(y, p)", V),
            ("cda-2", "dia(x.y, p) = dia(x, dia(y, p))", V),
            ("cda-3", "dia(p:sub, q) = p.q", V),
            ("cda-4", "dia(x || y, p) = dia(x, p).dia(y, p)", V),
            ("cda-5", "p + dia(x, dia(x^*, p)) = dia(x^*, p)", V),
            ("cda-6", "dia(x, p) <= p => dia(x^*, p) <= p", V),
        ],
    ),
    (
        "c-lattice",
        REL,
        &[
            ("cl1", "x.1p + x.n1p = x.U", V),
            ("cl2", "1p & (x + n1p) = x.0", V),
            ("cl3", "x.(y || z) <= (x.y) || (x.z)", V),
            ("cl4", "z || z <= z => (x || y).z = (x.z) || (y.z)", V),
            ("cl5", "x.(y.(z.0)) = (x.y).(z.0)", V),
            ("cl6", "(x.0).y = x.(0.y)", V),
            ("cl7", "1s || 1s = 1s", V),
            ("cl8", "((x.1p) || 1s).y = (x.1p) || y", V),
            ("cl9", "((x & 1s).1p) || 1s = x & 1s", V),
            ("cl10", "((x & n1p).1p) || 1s = 1s & (x & n1p).n1p", V),
            ("cl11", "((x & n1p).1p) || n1p = (x & n1p).n1p", V),
            ("complement-join", "1p + n1p = U", V),
            ("complement-meet", "1p & n1p = 0", V),
        ],
    ),
    (
        "fixpoints of subclasses",
        REL,
        &[
            ("subidfix-1", "d(x) = x => x <= 1s", V),
            ("subidfix-2", "x <= 1s => d(x) = x", V),
            ("subidfix-3", "x.1p = x => x <= 1p", V),
            ("subidfix-4", "x <= 1p => x.1p = x", V),
            ("subidfix-5", "x.0 = x => x <= 1p", V),
            ("subidfix-6", "x <= 1p => x.0 = x", V),
            ("subidfix-7", "(x.1p) || U = x => d(x).U = x", V),
            ("subidfix-8", "d(x).U = x => (x.1p) || U = x", V),
            ("subidfix-9", "x.0 = 0 => x & 1p = 0", V),
            ("subidfix-10", "x & 1p = 0 => x <= n1p", V),
            ("subidfix-11", "x <= n1p => x.0 = 0", V),
        ],
    ),
    (
        "c-lattice properties",
        REL,
        &[
            ("clatprops1-1", "(x.y).t:term = x.(y.t)", V),
            ("clatprops1-2", "(x.z:term) || (y.z) = (x || y).z", V),
            ("clatprops1-3", "(x.z:sub) || (y.z) = (x || y).z", V),
            ("clatprops1-4", "x <= x || x", V),
            ("clatprops1-5", "x & y <= x || y", V),
            ("clatprops1a-1", "x = (x & n1p) + x.0", V),
            ("clatprops1a-2", "p:sub <= n1p", V),
            ("clatprops1a-3", "(x.1p) & n1p = 0", V),
            ("clatprops1a-4", "(x.0) & n1p = 0", V),
            ("clatprops1a-5", "(x & n1p).0 = 0", V),
            ("clatprops2-1", "1p = U.0", V),
            ("clatprops2-2", "U || U = U", V),
            ("clatprops2-3", "U.U = U", V),
            ("clatprops2-4", "U.n1p = U", V),
            ("clatprops2-5", "n1p.U = U", V),
            ("clatprops2-6", "1p.x = 1p", V),
            ("clatprops2-7", "n1p.1p = 1p", V),
            ("clatprops2-8", "U.1p = 1p", V),
            ("clatprops2-9", "n1p || n1p = n1p", V),
            ("clatprops2-10", "U || n1p = n1p", V),
            ("clatprops2-11", "n1p.n1p = n1p", V),
            ("clatticeprops3-1", "x.y = (x & n1p).y + x.0", V),
            ("clatticeprops3-2", "1s & (x & n1p).y = 1s & x.y", V),
            ("clatticeprops3-3", "1s & x.n1p = 1s & x.U", V),
            ("clatticeprops3-4", "1s & x || n1p = 1s & x || U", V),
            ("clatticeprops3-5", "(x.1p) || n1p = (x & n1p).n1p + (x.0) || n1p", V),
            ("clatticeprops3-6", "(x.1p) || U = x.U + (x.0) || U", V),
        ],
    ),
    (
        "explicit domain",
        REL,
        &[
            ("dclatprop1-1", "d(U) = 1s", V),
            ("dclatprop1-2", "d(n1p) = 1s", V),
            ("dclatprop1-3", "d(x & n1p) = 1s & x.n1p", V),
            ("dclatprop1-4", "d(x & n1p) = 1s & (x & n1p).U", V),
            ("dclatprop1-5", "d(x & n1p) = 1s & x.U", V),
            ("dclatprop1-6", "d(x & n1p) = 1s & ((x & n1p).1p) || n1p", V),
            ("dclatprop1-7", "d(x & n1p) = 1s & ((x & n1p).1p) || U", V),
            ("explicitdomverif-1", "d(x) = 1s & (x.1p) || n1p", V),
            ("explicitdomverif-2", "d(x) = 1s & (x.1p) || U", V),
            ("explicitdomverif-3", "d(x) = (1p & x.U) || 1s", V),
            ("dompropsverif-1", "d(x & n1p).U = (x & n1p).U", V),
            ("dompropsverif-2", "d(x).n1p = (x & n1p).n1p + (x.0) || n1p", V),
            ("dompropsverif-3", "d(x).U = (x & n1p).U + (x.0) || U", V),
            ("dompropsverif-4", "d(x).U = x.U + (x.0) || U", V),
            ("dompropsverif-5", "x.n1p = d(x & n1p).n1p + x.0", V),
            ("dompropsverif-6", "x.U = d(x & n1p).U + x.0", V),
            ("dompropsverif-7", "d(x.U) = d(x)", V),
            ("dompropsverif-8", "d(x.n1p) = d(x)", V),
        ],
    ),
    (
        "subalgebras",
        REL,
        &[
            ("dsubalgebra-1", "d(p:sub & q:sub) = p & q", V),
            ("dsubalgebra-2", "p:sub.q:sub = p & q", V),
            ("dsubalgebra-3", "p:sub || q:sub = p & q", V),
            ("psubidalg-1", "0.0 = 0", V),
            ("psubidalg-2", "1p.0 = 1p", V),
            ("psubidalg-3", "x.0 + y.0 = (x + y).0", V),
            ("psubidalg-4", "(x.0) & (y.0) = (x & y).0", V),
            ("psubidalg-5", "(x.0) || (y.0) = (x || y).0", V),
            ("psubidalg-6", "(x.0).(y.0) = x.0", V),
            ("psubidalg-7", "s:term || t:term = s & t", V),
            ("vaux-1", "d(0).U = 0", V),
            ("vaux-2", "d(U).U = U", V),
            ("vaux-3", "d(x).z + d(y).z = d(x + y).z", V),
            ("vaux-4", "(d(x).U) || (d(y).U) = d(x || y).U", V),
            ("vector-terminal", "((U.0).1p) || U = U.0", R),
            ("nsubalg-1", "0 & n1p = 0", V),
            ("nsubalg-2", "1s & n1p = 1s", V),
            ("nsubalg-3", "(x:nt + y:nt) & n1p = x + y", V),
            ("nsubalg-4", "(x:nt . y:nt) & n1p = x.y", V),
            ("nsubalg-5", "(x:nt || y:nt) & n1p = x || y", V),
            ("tarski", "x & n1p != 0 => n1p.((x & n1p).n1p) = n1p", V),
            ("vecprop-1", "d(y).n1p = 0 => (d(x).n1p).(d(y).n1p) = 0", V),
            ("vecprop-2", "d(y).n1p != 0 => (d(x).n1p).(d(y).n1p) = d(x).n1p", V),
            ("vnsubalg-1", "0.n1p = 0", V),
            ("vnsubalg-2", "n1p.n1p = n1p", V),
            ("vnsubalg-3", "d(d(x).n1p + d(y).n1p).n1p = d(x).n1p + d(y).n1p", V),
            ("vnsubalg-4", "d(d(x).n1p & d(y).n1p).n1p = d(x).n1p & d(y).n1p", V),
            ("vnsubalg-5", "d((d(x).n1p).(d(y).n1p)).n1p = (d(x).n1p).(d(y).n1p)", V),
            ("vnsubalg-6", "(d(x).n1p) || (d(y).n1p) = d(x).n1p & d(y).n1p", V),
        ],
    ),
    (
        "isomorphisms",
        REL,
        &[
            ("iso2-1", "d(d(x).U) = d(x)", V),
            ("iso2-2", "d((x.1p) || U).U = (x.1p) || U", V),
            ("iso2-3", "((x.1p) || U).1p = x.1p", V),
            ("iso2-4", "(((x.1p) || U).1p) || U = (x.1p) || U", V),
            ("iso3-1", "d(d(x & n1p).1p) = d(x & n1p)", V),
            ("iso3-2", "d((x & n1p).1p).1p = (x & n1p).1p", V),
            ("iso3-3", "d(d(x & n1p).n1p) = d(x & n1p)", V),
            ("iso3-4", "d((x & n1p).n1p).n1p = (x & n1p).n1p", V),
            ("iso3-5", "(((x & n1p).1p) || n1p).1p = (x & n1p).1p", V),
            ("iso3-6", "(((x & n1p).n1p).1p) || n1p = (x & n1p).n1p", V),
        ],
    ),
    (
        "structure preservation",
        REL,
        &[
            ("pres-sub-term-join", "(p:sub + q:sub).1p = p.1p + q.1p", V),
            ("pres-sub-term-meet", "(p:sub & q:sub).1p = (p.1p) & (q.1p)", V),
            ("pres-sub-term-par", "(p:sub || q:sub).1p = (p.1p) || (q.1p)", V),
            ("pres-term-sub-join", "d(s:term + t:term) = d(s) + d(t)", V),
            ("pres-term-sub-meet", "d(s:term & t:term) = d(s) & d(t)", V),
            ("pres-term-sub-par", "d(s:term || t:term) = d(s) || d(t)", V),
            ("pres-sub-vec-join", "(p:sub + q:sub).U = p.U + q.U", V),
            ("pres-sub-vec-meet", "(p:sub & q:sub).U = (p.U) & (q.U)", V),
            ("pres-sub-vec-par", "(p:sub || q:sub).U = (p.U) || (q.U)", V),
            ("pres-vec-sub-join", "d(v:vec + w:vec) = d(v) + d(w)", V),
            ("pres-vec-sub-meet", "d(v:vec & w:vec) = d(v) & d(w)", V),
            ("pres-vec-sub-par", "d(v:vec || w:vec) = d(v) || d(w)", V),
            ("pres-term-vec-join", "(s:term + t:term) || U = s || U + t || U", V),
            ("pres-term-vec-meet", "(s:term & t:term) || U = (s || U) & (t || U)", V),
            ("pres-term-vec-par", "(s:term || t:term) || U = (s || U) || (t || U)", V),
            ("pres-vec-term-join", "(v:vec + w:vec).1p = v.1p + w.1p", V),
            ("pres-vec-term-meet", "(v:vec & w:vec).1p = (v.1p) & (w.1p)", V),
            ("pres-vec-term-par", "(v:vec || w:vec).1p = (v.1p) || (w.1p)", V),
            ("pres-vec-term-seq", "(v:vec . w:vec).1p = (v.1p).(w.1p)", V),
            ("pres-bounds-1", "0.1p = 0", V),
            ("pres-bounds-2", "1s.1p = 1p", V),
            ("pres-bounds-3", "d(1p) = 1s", V),
            ("pres-bounds-4", "1s.U = U", V),
            ("pres-bounds-5", "d(U) = 1s", V),
            ("pres-bounds-6", "1p || U = U", V),
            ("pres-bounds-7", "U.1p = 1p", V),
            ("pres-bounds-8", "1s.n1p = n1p", V),
            ("pres-bounds-9", "d(n1p) = 1s", V),
            ("pres-bounds-10", "1p || n1p = n1p", V),
            ("pres-bounds-11", "n1p.1p = 1p", V),
            ("pres-n-sub-vec-join", "(p:sub + q:sub).n1p = p.n1p + q.n1p", V),
            ("pres-n-sub-vec-meet", "(p:sub & q:sub).n1p = (p.n1p) & (q.n1p)", V),
            ("pres-n-sub-vec-par", "(p:sub || q:sub).n1p = (p.n1p) || (q.n1p)", V),
            ("pres-n-term-vec-join", "(s:term + t:term) || n1p = s || n1p + t || n1p", V),
            ("pres-n-term-vec-meet", "(s:term & t:term) || n1p = (s || n1p) & (t || n1p)", V),
            ("pres-n-term-vec-par", "(s:term || t:term) || n1p = (s || n1p) || (t || n1p)", V),
            ("pres-n-vec-term-join", "(d(x).n1p + d(y).n1p).1p = (d(x).n1p).1p + (d(y).n1p).1p", V),
            ("pres-n-vec-term-meet", "(d(x).n1p & d(y).n1p).1p = ((d(x).n1p).1p) & ((d(y).n1p).1p)", V),
            ("pres-n-vec-term-par", "((d(x).n1p) || (d(y).n1p)).1p = ((d(x).n1p).1p) || ((d(y).n1p).1p)", V),
            ("pres-n-vec-sub-join", "d(d(x).n1p + d(y).n1p) = d(d(x).n1p) + d(d(y).n1p)", V),
            ("pres-n-vec-sub-meet", "d(d(x).n1p & d(y).n1p) = d(d(x).n1p) & d(d(y).n1p)", V),
            ("pres-n-vec-sub-par", "d((d(x).n1p) || (d(y).n1p)) = d(d(x).n1p) || d(d(y).n1p)", V),
        ],
    ),
    (
        "structure preservation refutations",
        REL,
        &[
            ("nopres-sub-term-seq", "(p:sub.q:sub).1p = (p.1p).(q.1p)", R),
            ("nopres-sub-vec-seq", "(p:sub.q:sub).U = (p.U).(q.U)", R),
            ("nopres-term-sub-seq", "d(s:term.t:term) = d(s).d(t)", R),
            ("nopres-term-vec-seq", "(s:term.t:term) || U = (s || U).(t || U)", R),
            ("nopres-vec-sub-seq", "d(v:vec.w:vec) = d(v).d(w)", R),
            ("nopres-n-sub-vec-seq", "(p:sub.q:sub).n1p = (p.n1p).(q.n1p)", R),
            ("nopres-n-vec-sub-seq", "d((d(x).n1p).(d(y).n1p)) = d(d(x).n1p).d(d(y).n1p)", R),
            ("nopres-n-term-vec-seq", "(s:term.t:term) || n1p = (s || n1p).(t || n1p)", R),
            ("nopres-n-vec-term-seq", "((d(x).n1p).(d(y).n1p)).1p = ((d(x).n1p).1p).((d(y).n1p).1p)", R),
        ],
    ),
    (
        "terminal and nonterminal parts",
        REL,
        &[
            ("nutauinterior-1", "tau(x) <= x", V),
            ("nutauinterior-2", "tau(tau(x)) = tau(x)", V),
            ("nutauinterior-3", "x <= y => tau(x) <= tau(y)", V),
            ("nutauinterior-4", "nu(x) <= x", V),
            ("nutauinterior-5", "nu(nu(x)) = nu(x)", V),
            ("nutauinterior-6", "x <= y => nu(x) <= nu(y)", V),
            ("nutauinterior-7", "tau(x) + nu(x) = x", V),
            ("nutauinterior-8", "tau(x) & nu(x) = 0", V),
            ("nutauinterior-9", "tau(nu(x)) = 0", V),
            ("nutauinterior-10", "nu(tau(x)) = 0", V),
            ("nutauconst-1", "tau(0) = 0", V),
            ("nutauconst-2", "nu(0) = 0", V),
            ("nutauconst-3", "tau(1s) = 0", V),
            ("nutauconst-4", "nu(1s) = 1s", V),
            ("nutauconst-5", "tau(1p) = 1p", V),
            ("nutauconst-6", "nu(1p) = 0", V),
            ("nutauconst-7", "tau(n1p) = 0", V),
            ("nutauconst-8", "nu(n1p) = n1p", V),
            ("nutauconst-9", "tau(U) = 1p", V),
            ("nutauconst-10", "nu(U) = n1p", V),
            ("nutauhoms-1", "tau(x + y) = tau(x) + tau(y)", V),
            ("nutauhoms-2", "tau(x & y) = tau(x) & tau(y)", V),
            ("nutauhoms-3", "nu(x + y) = nu(x) + nu(y)", V),
            ("nutauhoms-4", "nu(x & y) = nu(x) & nu(y)", V),
            ("nutauhoms-5", "tau(x || y) = tau(x) || tau(y)", V),
            ("nutauhoms-6", "nu(x || y) = d(tau(x)).nu(y) + d(tau(y)).nu(x) + nu(x) || nu(y)", V),
            ("nutauhoms-7", "tau(x.y) = tau(x) + nu(x).tau(y)", V),
            ("nutauhomcounter-1", "tau(x.y) = tau(x).tau(y)", R),
            ("nutauhomcounter-2", "nu(x.y) = nu(x).nu(y)", R),
            ("nutauhomcounter-3", "nu(x || y) = nu(x) || nu(y)", R),
            ("taunusplit-1", "x.y = tau(x) + nu(x).y", V),
            ("taunusplit-2", "x || y = nu(x) || nu(y) + d(tau(x)).nu(y) + d(tau(y)).nu(x) + tau(x) || tau(y)", V),
            ("nsideal-1", "y <= x:nt => y & 1p = 0", V),
            ("nsideal-2", "y <= t:term => y.1p = y", V),
            ("nsideal-3", "(x:nt + y:nt) & 1p = 0", V),
            ("nsideal-4", "(s:term + t:term).1p = s + t", V),
            ("nsalgideal-1", "(x:nt || y) & 1p = 0", V),
            ("nsalgideal-2", "(t:term.y).1p = t.y", V),
            ("nsalgideal-3", "(y.t:term).1p = y.t", V),
            ("nsalgidealcounter-1", "(t:term.s:nt) & 1p = 0", R),
            ("nsalgidealcounter-2", "(s:nt.t:term) & 1p = 0", R),
            ("nsalgidealcounter-3", "(t:term || s:nt).1p = t || s", R),
        ],
    ),
    (
        "precongruences",
        REL,
        &[
            ("tauprecong-join", "tau(x) <= tau(y) => tau(x + z) <= tau(y + z)", V),
            ("tauprecong-meet", "tau(x) <= tau(y) => tau(x & z) <= tau(y & z)", V),
            ("tauprecong-par", "tau(x) <= tau(y) => tau(x || z) <= tau(y || z)", V),
            ("tauprecong-leftseq", "tau(x) <= tau(y) => tau(z.x) <= tau(z.y)", V),
            ("nuprecong-join", "nu(x) <= nu(y) => nu(x + z) <= nu(y + z)", V),
            ("nuprecong-meet", "nu(x) <= nu(y) => nu(x & z) <= nu(y & z)", V),
            ("nuprecong-rightseq", "nu(x) <= nu(y) => nu(x.z) <= nu(y.z)", V),
            ("taucong-join", "tau(x) = tau(y) => tau(x + z) = tau(y + z)", V),
            ("taucong-meet", "tau(x) = tau(y) => tau(x & z) = tau(y & z)", V),
            ("taucong-par", "tau(x) = tau(y) => tau(x || z) = tau(y || z)", V),
            ("taucong-leftseq", "tau(x) = tau(y) => tau(z.x) = tau(z.y)", V),
            ("nucong-join", "nu(x) = nu(y) => nu(x + z) = nu(y + z)", V),
            ("nucong-meet", "nu(x) = nu(y) => nu(x & z) = nu(y & z)", V),
            ("nucong-rightseq", "nu(x) = nu(y) => nu(x.z) = nu(y.z)", V),
            ("nutauprecongcounter-1", "tau(x) <= tau(y) => tau(x.z) <= tau(y.z)", R),
            ("nutauprecongcounter-2", "nu(x) <= nu(y) => nu(x || z) <= nu(y || z)", R),
            ("nutauprecongcounter-3", "nu(x) <= nu(y) => nu(z.x) <= nu(z.y)", R),
            ("nutaucongcounter-1", "tau(x) = tau(y) => tau(x.z) = tau(y.z)", R),
            ("nutaucongcounter-2", "nu(x) = nu(y) => nu(x || z) = nu(y || z)", R),
            ("nutaucongcounter-3", "nu(x) = nu(y) => nu(z.x) = nu(z.y)", R),
        ],
    ),
    (
        "finite iteration",
        REL,
        &[
            ("star-unfold", "1s + x.x^* = x^*", V),
            ("star-binary-unfold", "y + x.star(x, y) = star(x, y)", V),
            ("star-paren", "x^* = pstar(x)", V),
            ("star-bracket", "x^* = gstar(x)", V),
            ("star-powers", "x^* = sstar(x)", V),
            ("star-split", "x^* = nu(x)^*.(1s + tau(x))", V),
            ("taustar", "tau(x)^* = 1s + tau(x)", V),
            ("nustar-1", "nu(x)^* <= nu(x^*)", V),
            ("nustar-2", "tau(nu(x)^*) = 0", V),
            ("nustar-3", "nu(nu(x)^*) = nu(x)^*", V),
            ("nustar-4", "nu(tau(x)^*) = 1s", V),
            ("nustar-5", "tau(tau(x)^*) = tau(x)", V),
            ("nustar-powers", "sstar(nu(x)) = pstar(nu(x))", V),
            ("nustarcounter", "nu(x^*) <= nu(x)^*", R),
        ],
    ),
    (
        "infinite iteration",
        REL,
        &[
            ("omega-unfold", "x^w = x.x^w", V),
            ("omega-iso", "x <= y => x^w <= y^w", V),
            ("omega-const-1", "0^w = 0", V),
            ("omega-const-2", "1p^w = 1p", V),
            ("omega-const-3", "1s^w = U", V),
            ("omega-const-4", "n1p^w = U", V),
            ("omega-const-5", "U^w = U", V),
            ("tauomega-1", "tau(x) <= tau(x^w)", V),
            ("tauomega-2", "tau(x)^w = tau(x)", V),
            ("tauomega-3", "tau(x)^w <= tau(x^w)", V),
            ("omega-split", "nu(x)^w + nu(x)^*.tau(x) <= x^w", V),
            ("omega-split-converse", "x^w <= nu(x)^w + nu(x)^*.tau(x)", R),
            ("omega-fusion", "x^w + star(x, y) <= omega(x, y)", V),
            ("nucounter", "omega(x, y) = x^w + star(x, y)", R),
            ("omega-binary-unfold", "omega(x, y) = y + x.omega(x, y)", V),
            ("infinity-unfold", "x^inf = 1s + x.x^inf", V),
            ("inftycounter", "omega(x, y) = x^inf.y", R),
            ("nabla-unfold", "nabla(x) = dia(x, nabla(x))", V),
            ("nabla-coind", "p:sub <= dia(x, p) => p <= nabla(x)", V),
            ("nuomegadef", "nu(x)^w = nabla(nu(x)).U", V),
            ("nuomeganabla-1", "nu(nu(x)^w) = nabla(nu(x)).n1p", V),
            ("nuomeganabla-2", "tau(nu(x)^w) = nabla(nu(x)).1p", V),
            ("omega-nabla-split", "nabla(nu(x)).U + nu(x)^*.tau(x) <= x^w", V),
        ],
    ),
    (
        "counterexamples",
        REL,
        &[
            ("mrcounter1-1", "x || x <= x", R),
            ("mrcounter1-2", "x <= x || y", R),
            ("mrcounter1-3", "(x || y) & (x || z) <= x || (y & z)", R),
            ("mrcounter1-4", "x.(y.z) <= (x.y).z", R),
            ("mrcounter1-5", "(x.z) || (y.z) <= (x || y).z", R),
            ("mrcounter1-6", "x || x <= x, y || y <= y, z || z <= z => (x.y) || (x.z) <= x.(y || z)", R),
            ("interchangecounter-1a", "(w || x).(y || z) <= (w.y) || (x.z)", R),
            ("interchangecounter-1b", "(w.y) || (x.z) <= (w || x).(y || z)", R),
            ("interchangecounter-2a", "(x || y).z <= x || (y.z)", R),
            ("interchangecounter-2b", "x || (y.z) <= (x || y).z", R),
            ("interchangecounter-3a", "x.(y || z) <= (x.y) || z", R),
            ("interchangecounter-3b", "(x.y) || z <= x.(y || z)", R),
            ("interchangecounter-4a", "x.y <= x || y", R),
            ("interchangecounter-4b", "x || y <= x.y", R),
        ],
    ),
    (
        "up-closed multirelations",
        REL,
        &[
            ("parikhpeleg", "x;(y || U) = (x.y) || U", V),
            ("parikh-upclosed", "(x;(y || U)) || U = x;(y || U)", V),
            ("parikh-simulation", "(x || U);(y || U) = ((x || U).(y || U)) || U", V),
            ("parikh-assoc", "(x:up;y:up);z:up = x;(y;z)", V),
            ("upclosedpar-1", "(x || U) & (y || U) = (x || U) || (y || U)", V),
            ("upclosedpar-2", "(x || U) || (x || U) = x || U", V),
            ("upclosedpar-3", "(x || y).(z || U) = (x.(z || U)) || (y.(z || U))", V),
            ("upclosedparcor", "x:up || y:up = x & y", V),
            ("peleg-upclosed", "(x:up.y:up) || U = x.y", R),
        ],
    ),
];

/// The laws making up the c-monoid axiom set.
const CMONOID_AXIOMS: &[&str] =
    &["seq-unit-left", "seq-unit-right", "par-assoc", "par-comm", "par-unit", "c1", "c2", "c3", "c4", "c5"];

/// The c-trioid axioms: the proto-trioid laws, (c1)-(c5) and (c6).
const CTRIOID_AXIOMS: &[&str] = &[
    "join-assoc",
    "join-comm",
    "join-zero",
    "join-idem",
    "seq-unit-left",
    "seq-unit-right",
    "seq-subdist",
    "seq-rightdist",
    "seq-zero-left",
    "par-assoc",
    "par-comm",
    "par-unit",
    "par-dist",
    "par-zero",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
];

fn build() -> Vec<Law> {
    GROUPS
        .iter()
        .flat_map(|(anchor, model, entries)| {
            entries.iter().map(move |(name, text, expected)| {
                let (hypotheses, conclusion) =
                    parse_law_text(text).unwrap_or_else(|e| panic!("catalog entry {name}: {e}"));
                Law {
                    name: name.to_string(),
                    hypotheses,
                    conclusion,
                    expected: *expected,
                    anchor: anchor.to_string(),
                    model: *model,
                }
            })
        })
        .collect()
}

fn laws() -> &'static [Law] {
    static CATALOG: OnceLock<Vec<Law>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn catalog() -> Vec<Law> {
    laws().to_vec()
}

pub fn find_law(name: &str) -> Option<Law> {
    laws().iter().find(|l| l.name == name).cloned()
}

fn named(names: &[&str]) -> Vec<Law> {
    names.iter().map(|n| find_law(n).expect("axiom in catalog")).collect()
}

pub fn cmonoid_axioms() -> Vec<Law> {
    named(CMONOID_AXIOMS)
}

pub fn ctrioid_axioms() -> Vec<Law> {
    named(CTRIOID_AXIOMS)
}
