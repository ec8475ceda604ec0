//! Check suites returning a one-line summary, or the first disagreement.

use std::collections::BTreeSet;

use omega_recognition::conversions::{
    ba_to_strong, ba_to_weak, rees_expansion, split_expansion, weak_to_ba, weak_to_strong_general,
    weak_to_strong_simple,
};
use omega_recognition::{FiniteSemigroup, WeakRecognizer};

use super::*;

pub type Outcome = Result<String, String>;

fn fail<T: std::fmt::Debug>(what: &str, detail: T) -> Outcome {
    Err(format!("{what}: {detail:?}"))
}

/// `up_in_class` against the block oracle on every semigroup of order at
/// most 4, every two-letter morphism and every `u v^ω` with `|u|, |v| ≤ 4`.
/// Images `(x, y)` and `(y, x)` differ by renaming the letters, which maps
/// the word set onto itself, so only `x ≤ y` is run.
pub fn up_in_class_exhaustive() -> Outcome {
    let words = all_up_words(2, 4, 4);
    let mut checks = 0usize;
    let semigroups = small_semigroups();
    for sg in &semigroups {
        let pairs = sg.linked_pairs();
        let n = sg.size();
        for images in (0..n).flat_map(|x| (x..n).map(move |y| vec![x, y])) {
            let h = morphism(sg, images.clone());
            for w in &words {
                let oracle = block_oracle(sg, &images, w);
                let classes = h.up_classes(w);
                for &p in &pairs {
                    checks += 1;
                    if classes.contains(p) != oracle.contains(&(p.s, p.e)) {
                        return fail("up_in_class", (sg.table(), images, w, p));
                    }
                }
            }
        }
    }
    Ok(format!("{} semigroups, {checks} class checks", semigroups.len()))
}

/// Büchi membership against the lasso oracle: every automaton with at most
/// two states over two letters and with three states over one letter, plus
/// random automata with three and four states, on all short `u v^ω`.
pub fn buchi_membership() -> Outcome {
    let mut checks = 0usize;
    let mut automata = 0usize;
    let mut run = |a: &BuchiAutomaton, words: &[UpWord]| -> Result<(), String> {
        automata += 1;
        for w in words {
            checks += 1;
            if a.accepts_up(w) != lasso_oracle(a, w) {
                return Err(format!("accepts_up: {a:?} {w:?}"));
            }
        }
        Ok(())
    };
    let binary = all_up_words(2, 3, 3);
    let unary = all_up_words(1, 4, 4);
    for states in 1..=2 {
        for a in all_buchi(states, 2) {
            run(&a, &binary)?;
        }
    }
    for a in all_buchi(3, 1) {
        run(&a, &unary)?;
    }
    let mut r = rng(5);
    for states in [3, 4] {
        for _ in 0..500 {
            run(&random_buchi(&mut r, states, 2), &binary)?;
        }
    }
    Ok(format!("{automata} automata, {checks} words"))
}

fn weak_population(count: usize) -> Vec<WeakRecognizer> {
    let pool = small_semigroups();
    let mut r = rng(7);
    (0..count).map(|_| random_weak_recognizer(&mut r, &pool)).collect()
}

/// The split-set expansion against weak membership and the block oracle.
pub fn strong_expansion_agrees() -> Outcome {
    let mut r = rng(11);
    let mut checks = 0;
    let population = weak_population(60);
    for rec in &population {
        let strong = weak_to_strong_general(rec).map_err(|e| e.to_string())?;
        for _ in 0..200 {
            let w = random_up_word(&mut r, rec.alphabet().len(), 5);
            let (a, b, c) = (rec.contains(&w), strong.contains(&w), weak_oracle(rec, &w));
            checks += 1;
            if a != b || a != c {
                return fail("weak_to_strong_general", (rec, w, a, b, c));
            }
        }
    }
    Ok(format!("{} recognizers, {checks} words", population.len()))
}

/// The simple-semigroup expansion against weak membership.
pub fn simple_expansion_agrees() -> Outcome {
    let mut r = rng(13);
    let mut checks = 0;
    for _ in 0..60 {
        let rec = random_simple_recognizer(&mut r);
        let strong = weak_to_strong_simple(&rec).map_err(|e| e.to_string())?;
        let bound = rec.morphism().target().size() << rec.morphism().target().size().min(60);
        if strong.morphism().target().size() > bound {
            return fail("expansion larger than n·2^n", rec);
        }
        for _ in 0..200 {
            let w = random_up_word(&mut r, rec.alphabet().len(), 5);
            checks += 1;
            if rec.contains(&w) != strong.contains(&w) || rec.contains(&w) != weak_oracle(&rec, &w) {
                return fail("weak_to_strong_simple", (&rec, w));
            }
        }
    }
    Ok(format!("60 recognizers, {checks} words"))
}

/// `weak_to_ba` preserves the language of the same population.
pub fn weak_to_ba_agrees() -> Outcome {
    let mut r = rng(17);
    let mut checks = 0;
    let population = weak_population(60);
    for rec in &population {
        let ba = weak_to_ba(rec);
        for _ in 0..200 {
            let w = random_up_word(&mut r, rec.alphabet().len(), 5);
            checks += 1;
            let (a, b, c) = (rec.contains(&w), ba.accepts_up(&w), lasso_oracle(&ba, &w));
            if a != b || a != c {
                return fail("weak_to_ba", (rec, w, a, b, c));
            }
        }
    }
    Ok(format!("{} recognizers, {checks} words", population.len()))
}

/// `ba_to_weak` and `ba_to_strong` against Büchi membership.
pub fn buchi_recognizers_agree() -> Outcome {
    let mut r = rng(19);
    let mut checks = 0;
    for k in 0..40 {
        let a = random_buchi(&mut r, 1 + k % 4, 2);
        let weak = ba_to_weak(&a).map_err(|e| e.to_string())?;
        let strong = ba_to_strong(&a).map_err(|e| e.to_string())?;
        for _ in 0..50 {
            let w = random_up_word(&mut r, 2, 5);
            checks += 1;
            let (x, y, z, o) = (a.accepts_up(&w), weak.contains(&w), strong.contains(&w), lasso_oracle(&a, &w));
            if !(x == y && y == z && z == o) {
                return fail("ba_to_weak/ba_to_strong", (&a, w, x, y, z, o));
            }
        }
    }
    Ok(format!("40 automata, {checks} words"))
}

/// `xy = xz` implies `y = z` whenever `y R z`, on every simple semigroup
/// with at most 6 elements.
pub fn simple_cancellation() -> Outcome {
    let all = simple_semigroups(6);
    let mut checks = 0;
    for sg in &all {
        if !sg.is_simple() {
            return fail("Rees matrix semigroup not simple", sg.table());
        }
        let greens = sg.greens();
        let n = sg.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if greens.r_related(y, z) {
                        checks += 1;
                        if sg.mul(x, y) == sg.mul(x, z) && y != z {
                            return fail("cancellation", (sg.table(), x, y, z));
                        }
                    }
                }
            }
        }
    }
    // every simple semigroup of order ≤ 4 is among them up to isomorphism
    let sizes: BTreeSet<usize> = all.iter().map(FiniteSemigroup::size).collect();
    let small_simple = small_semigroups().into_iter().filter(FiniteSemigroup::is_simple).count();
    Ok(format!(
        "{} simple semigroups of sizes {sizes:?}, {checks} triples; {small_simple} simple among orders <= 4",
        all.len()
    ))
}

/// `R_t · s` is the only `x` with `x R t`, `x L s`, `γ(x) = γ(s)`, and the
/// only `x` with `x H ts`, `γ(x) = γ(s)`.
pub fn r_dot_uniqueness() -> Outcome {
    let mut r = rng(23);
    let mut checks = 0;
    for _ in 0..200 {
        let sg = random_simple_semigroup(&mut r, 54);
        let greens = sg.greens();
        let rees = sg.rees_structure().map_err(|e| e.to_string())?;
        let n = sg.size();
        for t in 0..n {
            for s in 0..n {
                let x = rees.r_dot(t, s);
                let a: Vec<_> = (0..n)
                    .filter(|&y| greens.r_related(y, t) && greens.l_related(y, s) && rees.gamma(y) == rees.gamma(s))
                    .collect();
                let ts = sg.mul(t, s);
                let b: Vec<_> =
                    (0..n).filter(|&y| greens.h_related(y, ts) && rees.gamma(y) == rees.gamma(s)).collect();
                checks += 1;
                if a != [x] || b != [x] {
                    return fail("r_dot", (sg.table(), t, s, x, a, b));
                }
            }
        }
    }
    Ok(format!("200 semigroups, {checks} pairs"))
}

/// For `g(u) = (s, X)`: `x ∈ X ∪ {s}` iff `u = pq` with `p ≠ ε`,
/// `x H h(qp)` and `γ(x) = γ(h(p))`.
pub fn rees_factorizations() -> Outcome {
    let mut r = rng(29);
    let mut checks = 0;
    for _ in 0..100 {
        let rec = random_simple_recognizer(&mut r);
        let h = rec.morphism();
        let sg = h.target();
        let greens = sg.greens();
        let rees = sg.rees_structure().map_err(|e| e.to_string())?;
        let ex = rees_expansion(&rec).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let u = random_word(&mut r, rec.alphabet().len(), 1, 6);
            let g = ex.image(&u).map_err(|e| e.to_string())?;
            for x in 0..sg.size() {
                let member = x == g.value || g.set.contains(&x);
                let witness = (1..=u.len()).any(|k| {
                    let (p, q) = u.split_at(k);
                    let qp: Vec<usize> = q.iter().chain(p).copied().collect();
                    let hp = eval(sg, h.letter_images(), p);
                    greens.h_related(x, eval(sg, h.letter_images(), &qp)) && rees.gamma(x) == rees.gamma(hp)
                });
                checks += 1;
                if member != witness {
                    return fail("factorization", (&rec, u, x, member, witness));
                }
            }
        }
    }
    Ok(format!("100 recognizers, {checks} element checks"))
}

fn compare_greens(sg: &FiniteSemigroup) -> Result<(), String> {
    let g = sg.greens();
    let n = sg.size();
    let brute = brute_greens(sg);
    for s in 0..n {
        for t in 0..n {
            let ours = [g.r_related(s, t), g.l_related(s, t), g.j_related(s, t), g.h_related(s, t)];
            if ours != brute[s * n + t] {
                return Err(format!("greens: {:?} {s} {t} {ours:?} {:?}", sg.table(), brute[s * n + t]));
            }
        }
    }
    Ok(())
}

/// Green's relations against the context definitions.
pub fn greens_brute_force() -> Outcome {
    let mut count = 0;
    for sg in small_semigroups().iter().chain(&simple_semigroups(6)) {
        compare_greens(sg)?;
        count += 1;
    }
    let mut r = rng(31);
    let mut largest = 0;
    for k in 0..100 {
        let sg = random_transformation_semigroup(&mut r, 3 + k % 2);
        largest = largest.max(sg.size());
        compare_greens(&sg)?;
        count += 1;
    }
    Ok(format!("{count} semigroups, largest random {largest}"))
}

/// `g(uv) = g(u)·g(v)` and `g(u)` matches its definition, for both
/// expansions.
pub fn expansion_morphism_law(seed: u64, u: &[usize], v: &[usize]) -> Result<(), String> {
    let mut r = rng(seed);
    let pool = small_semigroups();

    let rec = random_weak_recognizer(&mut r, &pool);
    let letters = rec.alphabet().len();
    let (u, v): (Vec<_>, Vec<_>) = (u.iter().map(|a| a % letters).collect(), v.iter().map(|a| a % letters).collect());
    let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
    let h = rec.morphism();
    let (sg, im) = (h.target(), h.letter_images());
    let ex = split_expansion(&rec).map_err(|e| e.to_string())?;
    let g = ex.recognizer.morphism();
    let t = g.target();
    let (gu, gv, guv) = (g.apply(&u).unwrap(), g.apply(&v).unwrap(), g.apply(&uv).unwrap());
    if t.mul(gu, gv) != guv {
        return Err(format!("split product {u:?} {v:?}"));
    }
    let el = &ex.elements[guv];
    let splits: BTreeSet<_> = (1..uv.len()).map(|k| (eval(sg, im, &uv[..k]), eval(sg, im, &uv[k..]))).collect();
    if el.value != eval(sg, im, &uv) || el.splits != splits {
        return Err(format!("split value {uv:?}"));
    }

    let rec = random_simple_recognizer(&mut r);
    let letters = rec.alphabet().len();
    let (u, v): (Vec<_>, Vec<_>) = (u.iter().map(|a| a % letters).collect(), v.iter().map(|a| a % letters).collect());
    let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
    let h = rec.morphism();
    let (sg, im) = (h.target(), h.letter_images());
    let rees = sg.rees_structure().map_err(|e| e.to_string())?;
    let ex = rees_expansion(&rec).map_err(|e| e.to_string())?;
    let g = ex.recognizer.morphism();
    let (gu, gv, guv) = (g.apply(&u).unwrap(), g.apply(&v).unwrap(), g.apply(&uv).unwrap());
    if g.target().mul(gu, gv) != guv {
        return Err(format!("rees product {u:?} {v:?}"));
    }
    let el = &ex.elements[guv];
    let set: BTreeSet<_> =
        (1..uv.len()).map(|k| rees.r_dot(eval(sg, im, &uv[k..]), eval(sg, im, &uv[..k]))).collect();
    if el.value != eval(sg, im, &uv) || el.set != set {
        return Err(format!("rees value {uv:?}"));
    }
    Ok(())
}

/// [`expansion_morphism_law`] on a fixed batch of random cases.
pub fn expansion_morphism_batch() -> Outcome {
    let mut r = rng(37);
    for seed in 0..200 {
        let u = random_word(&mut r, 3, 1, 5);
        let v = random_word(&mut r, 3, 1, 5);
        expansion_morphism_law(seed, &u, &v)?;
    }
    Ok("200 cases".into())
}
