//! Acceptance harness: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use hourglass_core::invariants::{coinv, count_colorings, enumerate_colorings, monomial, Family};
use hourglass_core::projection::{project_word, sl2_growth, Mark};
use hourglass_core::symmetry_words::{census, count_words_formula, generate_words, validate_word, ClassWordSpec};
use hourglass_core::tableaux::{tableau_to_word, word_to_tableau};
use hourglass_core::trips::{boundary_word, separation_labels, trip_permutation};
use hourglass_core::web::EdgeKind;
use hourglass_core::{enumerate_box, enumerate_class, macmahon_count, Box3, HourglassWeb, LatticeWord, PlanePartition, SymmetryClass};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{colorings_by_black_vertices, macmahon_oracle, random_yamanouchi, side_of};

/// Wall-clock limits in seconds, by criterion.
const LIMITS: [u64; 12] = [5, 10, 1, 10, 60, 1, 30, 60, 5, 5, 30, 1];
const TABLEAU_SEED: u64 = 0x5eed_7ab1;
const TABLEAU_SAMPLES: usize = 100;
const TABLEAU_MAX_LEN: usize = 12;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn word(s: &str) -> LatticeWord {
    LatticeWord::parse(s, 4).expect("literal word parses")
}

fn web_of(p: &PlanePartition) -> Result<HourglassWeb, String> {
    HourglassWeb::from_plane_partition(p).map_err(err)
}

fn boxes(max: usize) -> impl Iterator<Item = Box3> {
    (1..=max).flat_map(move |a| (1..=max).flat_map(move |b| (1..=max).map(move |c| Box3::new(a, b, c))))
}

/// Every class member with its class, for class-shaped boxes with sides at most `max`.
fn class_members(max: usize) -> Result<Vec<(SymmetryClass, PlanePartition)>, String> {
    let mut out = Vec::new();
    for a in 1..=max {
        for c in 1..=max {
            for p in enumerate_class(SymmetryClass::Spp, Box3::new(a, a, c)).map_err(err)? {
                out.push((SymmetryClass::Spp, p));
            }
        }
        for class in [SymmetryClass::Cspp, SymmetryClass::Tspp] {
            for p in enumerate_class(class, Box3::cube(a)).map_err(err)? {
                out.push((class, p));
            }
        }
        if a % 2 == 0 {
            for p in enumerate_class(SymmetryClass::Tsscpp, Box3::cube(a)).map_err(err)? {
                out.push((SymmetryClass::Tsscpp, p));
            }
        }
    }
    Ok(out)
}

/// Words seen by the other criteria, checked by the last one.
#[derive(Default)]
struct Seen {
    words: Vec<(String, LatticeWord)>,
}

impl Seen {
    fn add(&mut self, origin: impl Into<String>, w: &LatticeWord) {
        self.words.push((origin.into(), w.clone()));
    }
}

fn c1_macmahon() -> Outcome {
    let mut total = 0;
    for bx in boxes(3) {
        let n = enumerate_box(bx).len();
        let oracle = macmahon_oracle(bx.a, bx.b, bx.c);
        ensure(macmahon_count(bx) == BigUint::from(n), || format!("{bx}: enumerated {n}, formula {}", macmahon_count(bx)))?;
        ensure(n as u128 == oracle, || format!("{bx}: enumerated {n}, oracle {oracle}"))?;
        total += n;
    }
    ensure(enumerate_box(Box3::cube(2)).len() == 20, || "(2,2,2) is not 20".into())?;
    Ok(format!("27 boxes, {total} plane partitions, (3,3,3) = {}", macmahon_count(Box3::cube(3))))
}

fn c2_benzene(seen: &mut Seen) -> Outcome {
    let mut parts = Vec::new();
    for bx in [Box3::cube(1), Box3::cube(2)] {
        let class = web_of(&PlanePartition::empty(bx))?.benzene_class().map_err(err)?;
        ensure(BigUint::from(class.len()) == macmahon_count(bx), || format!("{bx}: class size {}", class.len()))?;
        let words: BTreeSet<LatticeWord> = class.iter().map(boundary_word).collect::<Result<_, _>>().map_err(err)?;
        ensure(words.len() == 1, || format!("{bx}: {} distinct words in the class", words.len()))?;
        let w = words.into_iter().next().expect("one word");
        seen.add(format!("benzene {bx}"), &w);
        parts.push(format!("{bx}: {}", class.len()));
    }
    Ok(parts.join(", "))
}

fn c3_golden(seen: &mut Seen) -> Outcome {
    let web = web_of(&PlanePartition::full(Box3::cube(1)))?;
    let w = boundary_word(&web).map_err(err)?;
    seen.add("single box", &w);
    ensure(w == word("1 -4 2 -2 4 -1"), || format!("word {w}"))?;
    let lab = separation_labels(&web).map_err(err)?;
    let internal = |kind: EdgeKind| -> Vec<Vec<u8>> {
        web.edges
            .iter()
            .filter(|e| e.kind == kind && e.ends.iter().all(|&v| web.boundary_index(v).is_none()))
            .map(|e| lab.colors(e.id))
            .collect()
    };
    let mut spokes = internal(EdgeKind::Simple);
    let mut hours = internal(EdgeKind::Hourglass);
    spokes.sort();
    hours.sort();
    ensure(spokes == [vec![2], vec![2], vec![4]], || format!("spokes {spokes:?}"))?;
    ensure(hours == [vec![1, 3], vec![1, 3], vec![3, 4]], || format!("hourglasses {hours:?}"))?;
    Ok("1 -4 2 -2 4 -1, spokes 2/4/2, hourglasses {3,4}/{1,3}/{1,3}".into())
}

fn c4_full_box(seen: &mut Seen) -> Outcome {
    let mut checked = 0;
    for bx in boxes(3) {
        if bx.a == bx.b {
            let (a, c) = (bx.a, bx.c);
            let mut letters = vec![1; a];
            letters.extend(vec![-4; c]);
            letters.extend(vec![2; a]);
            letters.extend(vec![-2; a]);
            letters.extend(vec![4; c]);
            letters.extend(vec![-1; a]);
            let expect = LatticeWord::new(4, letters, Vec::new()).map_err(err)?;
            let got = boundary_word(&web_of(&PlanePartition::full(bx))?).map_err(err)?;
            seen.add(format!("full {bx}"), &got);
            ensure(got == expect, || format!("{bx}: got {got}, expected {expect}"))?;
        } else {
            let class = web_of(&PlanePartition::empty(bx))?.benzene_class().map_err(err)?;
            let words: BTreeSet<LatticeWord> = class.iter().map(boundary_word).collect::<Result<_, _>>().map_err(err)?;
            ensure(words.len() == 1, || format!("{bx}: word changes under benzene moves"))?;
            let w = words.into_iter().next().expect("one word");
            ensure(w.is_yamanouchi(), || format!("{bx}: {w} is not Yamanouchi"))?;
            seen.add(format!("full {bx}"), &w);
        }
        checked += 1;
    }
    Ok(format!("{checked} boxes; a = b by formula, a != b Yamanouchi and benzene-invariant"))
}

fn c5_census(seen: &mut Seen) -> Outcome {
    let mut specs: Vec<(ClassWordSpec, BigUint)> = Vec::new();
    let binom = |n: u64, k: u64| (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1));
    for a in 1..=3u64 {
        for c in 1..=3u64 {
            specs.push((ClassWordSpec::Spp { a: a as usize, c: c as usize }, binom(a + c, a)));
        }
    }
    for a in 1..=3u64 {
        specs.push((ClassWordSpec::Cspp { a: a as usize }, BigUint::from(1u32) << a));
    }
    for (a, n) in [(1usize, 2u32), (2, 5)] {
        specs.push((ClassWordSpec::Tspp { a }, n.into()));
    }
    specs.push((ClassWordSpec::Tspp { a: 3 }, count_words_formula(ClassWordSpec::Tspp { a: 3 })));
    for (d, n) in [(1usize, 1u32), (2, 2), (3, 5)] {
        specs.push((ClassWordSpec::Tsscpp { d }, n.into()));
    }
    let mut failures = Vec::new();
    for (spec, expect) in &specs {
        let c = census(spec.class(), spec.box3()).map_err(err)?;
        for w in &c.words {
            seen.add(format!("census {spec}"), w);
        }
        let generated: BTreeSet<LatticeWord> = generate_words(*spec).into_iter().collect();
        for w in &generated {
            seen.add(format!("generated {spec}"), w);
        }
        ensure(generated == c.distinct, || format!("{spec}: generated set differs from the census"))?;
        ensure(count_words_formula(*spec) == *expect, || format!("{spec}: formula {}", count_words_formula(*spec)))?;
        if BigUint::from(c.distinct_count()) != *expect {
            failures.push(format!("{spec}: formula {expect}, census {}", c.distinct_count()));
        }
        if *spec == (ClassWordSpec::Tsscpp { d: 3 }) {
            ensure(c.total() == 7, || format!("TSSCPP(6,6,6) has {} webs", c.total()))?;
        }
    }
    if failures.is_empty() {
        Ok(format!("{} class specs, word sets equal the census", specs.len()))
    } else {
        Err(format!("word sets equal the census, but {}", failures.join("; ")))
    }
}

fn c6_reference_words() -> Outcome {
    let tsscpp = word("1 1 1 1 2 -4 2 -4 2 -4 2 (3,4) 4 4 (3,4) 4 (3,4) (3,4)");
    let cspp = word("1 1 1 1 -4 -4 -4 -4 (-3,-1) -1 (-3,-1) -1 4 (3,4) 4 (3,4)");
    ensure(tsscpp.len() == 22, || format!("TSSCPP reference word has {} letters", tsscpp.len()))?;
    ensure(validate_word(ClassWordSpec::Tsscpp { d: 4 }, &tsscpp), || "TSSCPP reference word rejected".into())?;
    ensure(validate_word(ClassWordSpec::Cspp { a: 4 }, &cspp), || "CSPP reference word rejected".into())?;
    Ok("TSSCPP(8,8,8) and CSPP(4,4,4) reference words validate".into())
}

/// Trip-1 side map of the written argument; reflections of the first three rows.
const TRIP1_PROSE: [(&str, &str); 6] = [("NE", "SE"), ("SE", "E"), ("E", "NW"), ("NW", "SW"), ("SW", "W"), ("W", "NE")];
const OPPOSITE: [(&str, &str); 6] = [("NE", "SW"), ("E", "W"), ("SE", "NW"), ("SW", "NE"), ("W", "E"), ("NW", "SE")];

fn trip_laws(web: &HourglassWeb) -> Result<(Vec<usize>, Vec<usize>), String> {
    let t1 = trip_permutation(web, 1).map_err(err)?;
    let t2 = trip_permutation(web, 2).map_err(err)?;
    let t3 = trip_permutation(web, 3).map_err(err)?;
    ensure((0..t1.len()).all(|i| t3[t1[i]] == i), || "trip1 and trip3 are not inverse".into())?;
    ensure((0..t2.len()).all(|i| t2[t2[i]] == i), || "trip2 is not an involution".into())?;
    Ok((t1, t2))
}

fn c7_trips() -> Outcome {
    let mut webs = 0;
    for bx in boxes(3) {
        for p in enumerate_box(bx) {
            trip_laws(&web_of(&p)?).map_err(|e| format!("{bx}: {e}"))?;
            webs += 1;
        }
    }
    for (class, p) in class_members(3)? {
        let web = HourglassWeb::restrict(&p, class).map_err(err)?;
        trip_laws(&web).map_err(|e| format!("{class} {}: {e}", p.box3()))?;
        webs += 1;
    }
    let prose: BTreeMap<&str, &str> = TRIP1_PROSE.into_iter().collect();
    let opposite: BTreeMap<&str, &str> = OPPOSITE.into_iter().collect();
    // Deviations from the stated map, split by whether the box is a cube.
    let mut off: [BTreeSet<(&str, &str, &str)>; 2] = Default::default();
    for bx in boxes(2) {
        for p in enumerate_box(bx) {
            let (t1, t2) = trip_laws(&web_of(&p)?)?;
            for i in 0..t1.len() {
                let s = side_of(bx, i);
                ensure(side_of(bx, t2[i]) == opposite[s], || format!("{bx}: trip2 sends {s} to {}", side_of(bx, t2[i])))?;
                if side_of(bx, t1[i]) != prose[s] {
                    off[usize::from(!bx.is_cube())].insert((s, side_of(bx, t1[i]), prose[s]));
                }
            }
        }
    }
    if off.iter().all(BTreeSet::is_empty) {
        return Ok(format!("{webs} webs; side maps as stated"));
    }
    let list = |set: &BTreeSet<(&str, &str, &str)>| -> String {
        set.iter().map(|(s, got, want)| format!("{s}->{got} (stated {want})")).collect::<Vec<_>>().join(", ")
    };
    Err(format!(
        "{webs} webs satisfy the laws and trip2 pairs opposite sides; trip1 on cubes: {}; on other boxes: {}",
        list(&off[0]),
        list(&off[1])
    ))
}

fn c8_restriction() -> Outcome {
    let mut n = 0;
    for (class, p) in class_members(4)? {
        let full = web_of(&p)?;
        let full_lab = separation_labels(&full).map_err(err)?;
        let web = HourglassWeb::restrict(&p, class).map_err(err)?;
        let lab = separation_labels(&web).map_err(err)?;
        let mut halves: BTreeMap<usize, BTreeSet<u8>> = BTreeMap::new();
        for e in &web.edges {
            let Some((orig, strand)) = e.origin else {
                return Err(format!("{class} {}: edge {} has no origin", p.box3(), e.id));
            };
            match strand {
                None => ensure(lab.colors(e.id) == full_lab.colors(orig), || {
                    format!("{class} {}: edge {} labels {:?}, full {:?}", p.box3(), e.id, lab.colors(e.id), full_lab.colors(orig))
                })?,
                Some(_) => halves.entry(orig).or_default().extend(lab.colors(e.id)),
            }
        }
        for (orig, set) in halves {
            let want: BTreeSet<u8> = full_lab.colors(orig).into_iter().collect();
            ensure(set == want, || format!("{class} {}: split pair {set:?}, hourglass {want:?}", p.box3()))?;
        }
        n += 1;
    }
    Ok(format!("{n} class members"))
}

fn c9_tableau(seen: &mut Seen) -> Outcome {
    let w = word("1 -4 2 -2 4 -1");
    let t = word_to_tableau(&w).map_err(err)?;
    let shapes: Vec<Vec<i64>> =
        vec![vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![1, 0, 0, -1], vec![1, 1, 0, -1], vec![1, 0, 0, -1], vec![1, 0, 0, 0], vec![0, 0, 0, 0]];
    ensure(t.shapes() == &shapes[..], || format!("shapes {:?}", t.shapes()))?;
    let filling = vec![vec![1, -6], vec![3, -4], vec![], vec![-2, 5]];
    ensure(t.filling() == filling, || format!("filling {:?}", t.filling()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(TABLEAU_SEED);
    for k in 0..TABLEAU_SAMPLES {
        let len = k % (TABLEAU_MAX_LEN + 1);
        let w = random_yamanouchi(&mut rng, 4, len);
        seen.add("random tableau word", &w);
        let back = tableau_to_word(&word_to_tableau(&w).map_err(err)?).map_err(err)?;
        ensure(back == w, || format!("round trip of {w} gave {back}"))?;
    }
    Ok(format!("reference tableau exact, {TABLEAU_SAMPLES} round trips"))
}

fn c10_projection(seen: &mut Seen) -> Outcome {
    let head = "1 1 1 2 -4 2 -4 2";
    let tails = ["4 (3,4) 4 (3,4)", "4 4 (3,4) (3,4)", "(3,4) 4 4 (3,4)", "(3,4) 4 (3,4) 4", "4 (3,4) (3,4) 4"];
    let p = Mark::Plain;
    let wm = Mark::White;
    let reference: [Vec<(usize, usize, Mark)>; 5] = [
        vec![(1, 4, p), (2, 3, p), (5, 6, wm), (7, 8, wm)],
        vec![(1, 8, p), (2, 5, p), (3, 4, wm), (6, 7, wm)],
        vec![(1, 6, p), (2, 5, p), (3, 4, wm), (7, 8, wm)],
        vec![(1, 6, p), (2, 3, p), (4, 5, wm), (7, 8, wm)],
        vec![(1, 8, p), (2, 3, p), (4, 5, wm), (6, 7, wm)],
    ];
    let spec = ClassWordSpec::Tsscpp { d: 3 };
    let mut produced = BTreeSet::new();
    let mut own_panel = Vec::new();
    for (k, tail) in tails.iter().enumerate() {
        let src = word(&format!("{head} {tail} (3,4)"));
        let r = project_word(spec, &src).map_err(err)?;
        seen.add("projected", &r.word);
        let m = sl2_growth(&r.word).map_err(err)?.pairs();
        if m == reference[k] {
            own_panel.push(k + 1);
        }
        produced.insert(m);
    }
    let drawn: BTreeSet<_> = reference.iter().cloned().collect();
    ensure(produced == drawn, || format!("matchings {produced:?} differ from the reference set"))?;
    ensure(own_panel.contains(&3), || "the worked example does not match its panel".into())?;

    let tspp = project_word(ClassWordSpec::Tspp { a: 4 }, &word("1 1 1 1 (2,3) 2 (2,3) 2 4 (3,4) 4 (3,4)")).map_err(err)?;
    seen.add("projected", &tspp.word);
    let want = LatticeWord::parse("(1,2) 1 (1,2) 1 3 (2,3) 3 (2,3)", 3).map_err(err)?;
    ensure(tspp.word == want, || format!("TSPP word projects to {}", tspp.word))?;

    let mut specs: Vec<ClassWordSpec> = Vec::new();
    for a in 1..=3 {
        for c in 1..=3 {
            specs.push(ClassWordSpec::Spp { a, c });
        }
    }
    specs.extend((1..=4).map(|a| ClassWordSpec::Tspp { a }));
    specs.extend((1..=4).map(|d| ClassWordSpec::Tsscpp { d }));
    for spec in specs {
        let words = generate_words(spec);
        let mut images = BTreeSet::new();
        for w in &words {
            let r = project_word(spec, w).map_err(err)?;
            seen.add(format!("projected {spec}"), &r.word);
            images.insert(r.word);
        }
        ensure(images.len() == words.len(), || format!("{spec}: {} words, {} images", words.len(), images.len()))?;
    }
    Ok(format!("reference matchings as a set; panels {own_panel:?} agree word by word; TSPP exact; injective"))
}

fn c11_invariant() -> Outcome {
    ensure(coinv(&[1, 2, 3, 1, 2, 3]) == 12, || "coinv(1,2,3,1,2,3) != 12".into())?;
    let web = web_of(&PlanePartition::full(Box3::cube(1)))?;
    let found = enumerate_colorings(&web).into_iter().find(|k| {
        let m = monomial(&web, k);
        let mut hours: Vec<u8> = web.edges.iter().filter(|e| e.kind == EdgeKind::Hourglass).map(|e| k.masks[e.id]).collect();
        let mut spokes: Vec<u8> = web
            .edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Simple && e.ends.iter().all(|&v| web.boundary_index(v).is_none()))
            .map(|e| k.masks[e.id])
            .collect();
        hours.sort_unstable();
        spokes.sort_unstable();
        m.boundary_colors() == [1, 2, 3, 1, 2, 3] && hours == [0b1001, 0b1010, 0b1100] && spokes == [1, 2, 4]
    });
    let k = found.ok_or("example coloring missing")?;
    let m = monomial(&web, &k);
    ensure(m.sign == 1, || format!("sign {}", m.sign))?;
    let fams: Vec<Family> = m.factors.iter().map(|f| f.family).collect();
    ensure(fams == [Family::X, Family::Y, Family::X, Family::Y, Family::X, Family::Y], || format!("families {fams:?}"))?;
    let mut webs = 0;
    for bx in boxes(2) {
        for p in enumerate_box(bx) {
            let w = web_of(&p)?;
            let (got, oracle) = (count_colorings(&w), colorings_by_black_vertices(&w));
            ensure(got == oracle, || format!("{bx}: {got} colorings, oracle {oracle}"))?;
            webs += 1;
        }
    }
    Ok(format!("coinv 12, example coloring sign +1, counts agree on {webs} webs"))
}

fn c12_yamanouchi(seen: &Seen) -> Outcome {
    for (origin, w) in &seen.words {
        ensure(w.is_yamanouchi(), || format!("{origin}: {w} is not Yamanouchi at rank {}", w.rank()))?;
    }
    Ok(format!("{} words", seen.words.len()))
}

fn main() {
    let mut seen = Seen::default();
    let mut failed = 0;
    let mut run = |id: usize, name: &str, f: &mut dyn FnMut(&mut Seen) -> Outcome| {
        let t = Instant::now();
        let res = f(&mut seen);
        let dt = t.elapsed();
        let limit = Duration::from_secs(LIMITS[id - 1]);
        let (pass, detail) = match res {
            Ok(d) if dt <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} {id:>2} {name} ({:.2}s, limit {}s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            limit.as_secs()
        );
    };
    run(1, "plane partition counts", &mut |_| c1_macmahon());
    run(2, "benzene classes", &mut c2_benzene);
    run(3, "single-box word and labels", &mut c3_golden);
    run(4, "full-box words", &mut c4_full_box);
    run(5, "class word census", &mut c5_census);
    run(6, "reference words", &mut |_| c6_reference_words());
    run(7, "trip laws", &mut |_| c7_trips());
    run(8, "restriction keeps labels", &mut |_| c8_restriction());
    run(9, "tableau", &mut c9_tableau);
    run(10, "projection", &mut c10_projection);
    run(11, "invariant expansion", &mut |_| c11_invariant());
    run(12, "Yamanouchi words", &mut |s| c12_yamanouchi(s));
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
