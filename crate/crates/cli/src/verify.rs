//! Verification suites behind `hourglass verify`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, ValueEnum};

use hourglass_core::projection::{matching_validate, project_plane_partition};
use hourglass_core::symmetry_words::{census, count_words_formula, generate_words, ClassWordSpec};
use hourglass_core::trips::{boundary_word, separation_labels, trip_permutation};
use hourglass_core::{enumerate_box, enumerate_class, macmahon_count, Box3, HourglassWeb, LatticeWord, SymmetryClass};

use crate::CliError;

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Macmahon,
    Benzene,
    Words,
    Counts,
    Projection,
    Trips,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest box side (or class parameter) to check.
    #[arg(long, default_value_t = 3)]
    max: usize,
}

/// Worker count from `HOURGLASS_THREADS`, else the machine's parallelism.
pub fn threads() -> Result<usize, CliError> {
    match std::env::var("HOURGLASS_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!("HOURGLASS_THREADS must be a positive integer, got {s:?}"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Maps `f` over `items` on up to `n` threads; results keep the input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], n: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..n.min(items.len()).max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every slot filled")).collect()
}

type Check = Result<(bool, String), CliError>;

fn boxes(max: usize) -> Vec<Box3> {
    let mut v = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                v.push(Box3::new(a, b, c));
            }
        }
    }
    v
}

/// Class specs with every parameter at most `max`.
fn specs(max: usize) -> Vec<ClassWordSpec> {
    let mut v = Vec::new();
    for a in 1..=max {
        for c in 1..=max {
            v.push(ClassWordSpec::Spp { a, c });
        }
    }
    v.extend((1..=max).map(|a| ClassWordSpec::Cspp { a }));
    v.extend((1..=max).map(|a| ClassWordSpec::Tspp { a }));
    v.extend((1..=max).map(|d| ClassWordSpec::Tsscpp { d }));
    v
}

fn macmahon(bx: &Box3) -> Check {
    let n = enumerate_box(*bx).len();
    let f = macmahon_count(*bx);
    Ok((f == n.into(), format!("box {bx}: enumerated {n}, formula {f}")))
}

fn benzene(bx: &Box3) -> Check {
    let all = enumerate_box(*bx);
    let mut words = BTreeSet::new();
    for p in &all {
        words.insert(boundary_word(&HourglassWeb::from_plane_partition(p)?)?);
    }
    let class = HourglassWeb::from_plane_partition(&all[0])?.benzene_class()?;
    let ok = words.len() == 1 && class.len() == all.len();
    Ok((ok, format!("box {bx}: {} distinct words, benzene class {} of {}", words.len(), class.len(), all.len())))
}

fn words(spec: &ClassWordSpec) -> Check {
    let c = census(spec.class(), spec.box3())?;
    let generated: BTreeSet<_> = generate_words(*spec).into_iter().collect();
    let ok = generated == c.distinct;
    Ok((ok, format!("{spec}: census {} distinct, generated {}", c.distinct_count(), generated.len())))
}

fn counts(spec: &ClassWordSpec) -> Check {
    let f = count_words_formula(*spec);
    let c = census(spec.class(), spec.box3())?;
    let g = generate_words(*spec).len();
    let ok = f == c.distinct_count().into() && f == g.into();
    Ok((ok, format!("{spec}: formula {f}, census {}, generated {g}", c.distinct_count())))
}

fn projection(spec: &ClassWordSpec) -> Check {
    let class = spec.class();
    if class == SymmetryClass::Cspp {
        return Ok((true, format!("{spec}: skipped, no projection")));
    }
    // Reduced word -> source word; a clash means the projection is not injective.
    let mut seen: BTreeMap<LatticeWord, LatticeWord> = BTreeMap::new();
    let mut n = 0;
    let mut ok = true;
    for p in enumerate_class(class, spec.box3()).map_err(|e| CliError::Usage(e.to_string()))? {
        let pr = project_plane_partition(&p, class)?;
        if let Some(m) = &pr.matching {
            ok &= matching_validate(m);
        }
        n += 1;
        ok &= *seen.entry(pr.reduced.word).or_insert_with(|| pr.source.clone()) == pr.source;
    }
    Ok((ok, format!("{spec}: {n} members, {} distinct reduced words", seen.len())))
}

fn trips(bx: &Box3) -> Check {
    let mut ok = true;
    let all = enumerate_box(*bx);
    for p in &all {
        let web = HourglassWeb::from_plane_partition(p)?;
        let t1 = trip_permutation(&web, 1)?;
        let t2 = trip_permutation(&web, 2)?;
        let t3 = trip_permutation(&web, 3)?;
        ok &= (0..t1.len()).all(|i| t3[t1[i]] == i && t2[t2[i]] == i && t2[i] != i);
        separation_labels(&web)?;
    }
    Ok((ok, format!("box {bx}: trip laws on {} webs", all.len())))
}

fn report<T: Sync>(items: &[T], check: fn(&T) -> Check) -> Result<String, CliError> {
    let results = par_map(items, threads()?, check);
    let mut out = String::new();
    let mut failed = 0;
    for r in results {
        let (ok, msg) = r?;
        if !ok {
            failed += 1;
        }
        out.push_str(if ok { "ok   " } else { "FAIL " });
        out.push_str(&msg);
        out.push('\n');
    }
    if failed > 0 {
        print!("{out}");
        return Err(CliError::Verify(format!("{failed} check(s) failed")));
    }
    Ok(out)
}

pub fn run(args: VerifyArgs) -> Result<String, CliError> {
    let max = args.max;
    match args.suite {
        Suite::Macmahon => report(&boxes(max), macmahon),
        Suite::Benzene => report(&boxes(max), benzene),
        Suite::Trips => report(&boxes(max), trips),
        Suite::Words => report(&specs(max), words),
        Suite::Counts => report(&specs(max), counts),
        Suite::Projection => report(&specs(max), projection),
    }
}
