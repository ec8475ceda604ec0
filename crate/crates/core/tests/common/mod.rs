//! Independent oracles, semigroup enumerations and random instances shared
//! by the integration suites.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use omega_recognition::semigroup::generate_subsemigroup;
use omega_recognition::{
    Alphabet, BuchiAutomaton, Element, FiniteSemigroup, LinkedPair, Morphism, UpWord, WeakRecognizer, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub mod suites;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// enumerations

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn partial_associative(n: usize, t: &[Option<usize>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a * n + b] else { continue };
            for c in 0..n {
                let (Some(bc), Some(l)) = (t[b * n + c], t[ab * n + c]) else { continue };
                if let Some(r) = t[a * n + bc] {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill(n: usize, k: usize, t: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
    if k == n * n {
        out.push(t.iter().map(|x| x.unwrap()).collect());
        return;
    }
    for v in 0..n {
        t[k] = Some(v);
        if partial_associative(n, t) {
            fill(n, k + 1, t, out);
        }
    }
    t[k] = None;
}

/// Every associative table on `{0, …, n−1}`.
pub fn labeled_semigroup_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fill(n, 0, &mut vec![None; n * n], &mut out);
    out
}

fn canonical(n: usize, table: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    perms
        .iter()
        .map(|p| {
            // relabel x ↦ p[x]
            let mut t = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    t[p[x] * n + p[y]] = p[table[x * n + y]];
                }
            }
            t
        })
        .min()
        .unwrap()
}

/// Semigroups of order `n` up to isomorphism.
pub fn semigroups_up_to_iso(n: usize) -> Vec<FiniteSemigroup> {
    let perms = permutations(n);
    let classes: BTreeSet<Vec<usize>> =
        labeled_semigroup_tables(n).iter().map(|t| canonical(n, t, &perms)).collect();
    classes
        .into_iter()
        .map(|t| FiniteSemigroup::from_table(n, t).unwrap())
        .collect()
}

/// All semigroups of order 1 to 4 up to isomorphism.
pub fn small_semigroups() -> Vec<FiniteSemigroup> {
    (1..=4).flat_map(semigroups_up_to_iso).collect()
}

/// Groups of order at most 6 as multiplication tables.
pub fn small_groups() -> Vec<Vec<Vec<usize>>> {
    let cyclic = |k: usize| (0..k).map(|x| (0..k).map(|y| (x + y) % k).collect()).collect();
    let klein = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let perms = permutations(3);
    let s3 = (0..6)
        .map(|x| {
            (0..6)
                .map(|y| {
                    let comp: Vec<usize> = (0..3).map(|i| perms[x][perms[y][i]]).collect();
                    perms.iter().position(|p| *p == comp).unwrap()
                })
                .collect()
        })
        .collect();
    let mut out: Vec<Vec<Vec<usize>>> = (1..=6).map(cyclic).collect();
    out.push(klein);
    out.push(s3);
    out
}

/// `M(G; I, Λ; P)` with elements `(i, x, λ)` numbered `(i·|G| + x)·|Λ| + λ`
/// and `(i, x, λ)(j, y, μ) = (i, x·P[λ][j]·y, μ)`.
pub fn rees_matrix(g: &[Vec<usize>], rows: usize, cols: usize, sandwich: &[usize]) -> FiniteSemigroup {
    let k = g.len();
    let dec = |s: usize| (s / (k * cols), s / cols % k, s % cols);
    FiniteSemigroup::from_fn(rows * k * cols, |s, t| {
        let ((i, x, lam), (j, y, mu)) = (dec(s), dec(t));
        let z = g[g[x][sandwich[lam * rows + j]]][y];
        (i * k + z) * cols + mu
    })
    .unwrap()
}

/// Every Rees matrix semigroup with at most `max` elements over the groups
/// of [`small_groups`], one per sandwich matrix. Up to isomorphism these are
/// all simple semigroups of that size.
pub fn simple_semigroups(max: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    for g in small_groups() {
        let k = g.len();
        for rows in 1..=max {
            for cols in 1..=max {
                if rows * k * cols > max {
                    continue;
                }
                let cells = rows * cols;
                let total = k.pow(cells as u32);
                for code in 0..total {
                    let sandwich: Vec<usize> = (0..cells).map(|c| code / k.pow(c as u32) % k).collect();
                    out.push(rees_matrix(&g, rows, cols, &sandwich));
                }
            }
        }
    }
    out
}

/// A random Rees matrix semigroup with at most `max` elements.
pub fn random_simple_semigroup(r: &mut StdRng, max: usize) -> FiniteSemigroup {
    let groups: Vec<_> = small_groups().into_iter().filter(|g| g.len() <= max).collect();
    let g = &groups[r.random_range(0..groups.len())];
    let rows = r.random_range(1..=(max / g.len()).min(3));
    let cols = r.random_range(1..=(max / (g.len() * rows)).min(3));
    let sandwich: Vec<usize> = (0..rows * cols).map(|_| r.random_range(0..g.len())).collect();
    rees_matrix(g, rows, cols, &sandwich)
}

/// The transformation semigroup generated by two random maps on `k` points.
pub fn random_transformation_semigroup(r: &mut StdRng, k: usize) -> FiniteSemigroup {
    let gens: Vec<Vec<usize>> = (0..2).map(|_| (0..k).map(|_| r.random_range(0..k)).collect()).collect();
    let closure = generate_subsemigroup(&gens, |f, g| f.iter().map(|&x| g[x]).collect(), 10_000).unwrap();
    closure.semigroup
}

// ---------------------------------------------------------------------------
// random instances

pub fn random_word(r: &mut StdRng, letters: usize, min: usize, max: usize) -> Word {
    let len = r.random_range(min..=max);
    (0..len).map(|_| r.random_range(0..letters)).collect()
}

pub fn random_up_word(r: &mut StdRng, letters: usize, max: usize) -> UpWord {
    UpWord::new(random_word(r, letters, 0, max), random_word(r, letters, 1, max)).unwrap()
}

/// Every `u v^ω` with `|u| ≤ max_u` and `1 ≤ |v| ≤ max_v`.
pub fn all_up_words(letters: usize, max_u: usize, max_v: usize) -> Vec<UpWord> {
    let prefixes = omega_recognition::word::words_up_to(letters, max_u);
    let periods = omega_recognition::word::words_up_to(letters, max_v);
    let mut out = Vec::new();
    for u in &prefixes {
        for v in periods.iter().filter(|v| !v.is_empty()) {
            out.push(UpWord::new(u.clone(), v.clone()).unwrap());
        }
    }
    out
}

pub fn morphism(sg: &FiniteSemigroup, images: Vec<Element>) -> Morphism {
    Morphism::new(Alphabet::latin(images.len()), sg.clone(), images).unwrap()
}

/// A weak recognizer over one of the small semigroups, with random letter
/// images and a random set of accepted linked pairs.
pub fn random_weak_recognizer(r: &mut StdRng, pool: &[FiniteSemigroup]) -> WeakRecognizer {
    let sg = &pool[r.random_range(0..pool.len())];
    let letters = r.random_range(2..=3);
    let h = morphism(sg, (0..letters).map(|_| r.random_range(0..sg.size())).collect());
    let pairs = h.image_linked_pairs();
    let accept: Vec<LinkedPair> = pairs.into_iter().filter(|_| r.random_bool(0.4)).collect();
    WeakRecognizer::new(h, accept).unwrap()
}

pub fn random_simple_recognizer(r: &mut StdRng) -> WeakRecognizer {
    let sg = random_simple_semigroup(r, 8);
    let letters = r.random_range(1..=3);
    let h = morphism(&sg, (0..letters).map(|_| r.random_range(0..sg.size())).collect());
    let pairs = h.image_linked_pairs();
    let accept: Vec<LinkedPair> = pairs.into_iter().filter(|_| r.random_bool(0.3)).collect();
    WeakRecognizer::new(h, accept).unwrap()
}

pub fn random_buchi(r: &mut StdRng, states: usize, letters: usize) -> BuchiAutomaton {
    let mut trans = Vec::new();
    for p in 0..states {
        for a in 0..letters {
            for q in 0..states {
                if r.random_bool(0.35) {
                    trans.push((p, a, q));
                }
            }
        }
    }
    let mut initial: Vec<usize> = (0..states).filter(|_| r.random_bool(0.4)).collect();
    if initial.is_empty() {
        initial.push(0);
    }
    let finals: Vec<usize> = (0..states).filter(|_| r.random_bool(0.4)).collect();
    BuchiAutomaton::new(states, Alphabet::latin(letters), trans, initial, finals).unwrap()
}

/// Every automaton with the given number of states over `letters` letters,
/// with at least one initial state.
pub fn all_buchi(states: usize, letters: usize) -> Vec<BuchiAutomaton> {
    let cells = states * letters * states;
    let mut out = Vec::new();
    for code in 0..1u64 << cells {
        let trans: Vec<_> = (0..cells)
            .filter(|&c| code >> c & 1 == 1)
            .map(|c| (c / (letters * states), c / states % letters, c % states))
            .collect();
        for init in 1..1usize << states {
            for fin in 0..1usize << states {
                let pick = |m: usize| (0..states).filter(|&q| m >> q & 1 == 1).collect::<Vec<_>>();
                out.push(
                    BuchiAutomaton::new(states, Alphabet::latin(letters), trans.clone(), pick(init), pick(fin))
                        .unwrap(),
                );
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// oracles

/// Positions of `u v^ω` folded to `|u| + |v|` indices.
struct Positions<'a> {
    w: &'a UpWord,
}

impl Positions<'_> {
    fn count(&self) -> usize {
        self.w.prefix().len() + self.w.period().len()
    }

    fn letter(&self, i: usize) -> usize {
        let u = self.w.prefix();
        if i < u.len() { u[i] } else { self.w.period()[i - u.len()] }
    }

    fn next(&self, i: usize) -> usize {
        if i + 1 < self.count() { i + 1 } else { self.w.prefix().len() }
    }
}

fn reach_from(start: usize, edges: &[Vec<usize>]) -> Vec<bool> {
    let mut seen = vec![false; edges.len()];
    let mut queue: VecDeque<usize> = edges[start].iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        if !seen[x] {
            seen[x] = true;
            queue.extend(edges[x].iter().copied());
        }
    }
    seen
}

fn reachability(edges: &[Vec<usize>]) -> Vec<Vec<bool>> {
    (0..edges.len()).map(|start| reach_from(start, edges)).collect()
}

/// All `(s, e)` such that `u v^ω` factors as `w₀ w₁ w₂ …` with `h(w₀) = s`
/// and `h(wᵢ) = e` for `i ≥ 1`.
///
/// Blocks are read letter by letter on the graph of (position, partial
/// product) nodes; a cut is allowed wherever the partial product equals `e`,
/// and an infinite factorization is a reachable cycle through a cut.
pub fn block_oracle(sg: &FiniteSemigroup, images: &[Element], w: &UpWord) -> BTreeSet<(Element, Element)> {
    let pos = Positions { w };
    let n = sg.size();
    let width = n + 1; // partial product, n = nothing read yet
    let count = pos.count();
    let letter: Vec<Element> = (0..count).map(|i| images[pos.letter(i)]).collect();
    let next: Vec<usize> = (0..count).map(|i| pos.next(i)).collect();
    let mut out = BTreeSet::new();

    // prefix products h(w[0..p]) for p ≥ 1 until (position, product) repeats
    let mut prefixes = Vec::new();
    let mut seen = HashSet::new();
    let mut prod = letter[0];
    let mut i = next[0];
    while seen.insert((i, prod)) {
        prefixes.push((i, prod));
        prod = sg.mul(prod, letter[i]);
        i = next[i];
    }

    let mut visited = vec![false; count * width];
    let mut stack = Vec::new();
    for e in 0..n {
        // reach[i][j]: block start j is reachable from block start i by a
        // nonempty path, i.e. through at least one cut
        let mut reach = vec![vec![false; count]; count];
        for (i, row) in reach.iter_mut().enumerate() {
            visited.fill(false);
            stack.clear();
            stack.push((i, n));
            while let Some((p, c)) = stack.pop() {
                let c2 = if c == n { letter[p] } else { sg.mul(c, letter[p]) };
                let j = next[p];
                if c2 == e {
                    row[j] = true;
                    if !visited[j * width + n] {
                        visited[j * width + n] = true;
                        stack.push((j, n));
                    }
                }
                if !visited[j * width + c2] {
                    visited[j * width + c2] = true;
                    stack.push((j, c2));
                }
            }
        }
        let good: Vec<bool> =
            (0..count).map(|i| (0..count).any(|j| (j == i || reach[i][j]) && reach[j][j])).collect();
        for &(i, s) in &prefixes {
            if good[i] {
                out.insert((s, e));
            }
        }
    }
    out
}

pub fn weak_oracle(rec: &WeakRecognizer, w: &UpWord) -> bool {
    let h = rec.morphism();
    let classes = block_oracle(h.target(), h.letter_images(), w);
    rec.accepting().iter().any(|p| classes.contains(&(p.s, p.e)))
}

/// Büchi acceptance by a lasso search on (state, position) pairs.
pub fn lasso_oracle(a: &BuchiAutomaton, w: &UpWord) -> bool {
    let pos = Positions { w };
    let count = pos.count();
    let q = a.states();
    let node = |state: usize, i: usize| i * q + state;
    let mut edges = vec![Vec::new(); count * q];
    for i in 0..count {
        for p in 0..q {
            for &r in a.successors(p, pos.letter(i)) {
                edges[node(p, i)].push(node(r, pos.next(i)));
            }
        }
    }
    let reach = reachability(&edges);
    a.initial().iter().any(|&i0| {
        let start = node(i0, 0);
        a.finals().iter().any(|&f| {
            (0..count).any(|i| {
                let x = node(f, i);
                (x == start || reach[start][x]) && reach[x][x]
            })
        })
    })
}

/// Green's relations from the definitions `sS¹ = tS¹`, `S¹s = S¹t` and
/// `S¹sS¹ = S¹tS¹`, as `(R, L, J, H)` predicates over all pairs.
pub fn brute_greens(sg: &FiniteSemigroup) -> Vec<[bool; 4]> {
    let n = sg.size();
    let right: Vec<BTreeSet<usize>> =
        (0..n).map(|s| std::iter::once(s).chain((0..n).map(|x| sg.mul(s, x))).collect()).collect();
    let left: Vec<BTreeSet<usize>> =
        (0..n).map(|s| std::iter::once(s).chain((0..n).map(|x| sg.mul(x, s))).collect()).collect();
    let two: Vec<BTreeSet<usize>> = (0..n)
        .map(|s| {
            let mut set = right[s].clone();
            for &t in &right[s] {
                set.extend(left[t].iter().copied());
            }
            set
        })
        .collect();
    let mut out = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let r = right[s] == right[t];
            let l = left[s] == left[t];
            out.push([r, l, two[s] == two[t], r && l]);
        }
    }
    out
}

/// `h(w)` of a nonempty word by folding letter images.
pub fn eval(sg: &FiniteSemigroup, images: &[Element], w: &[usize]) -> Element {
    w[1..].iter().fold(images[w[0]], |x, &a| sg.mul(x, images[a]))
}
