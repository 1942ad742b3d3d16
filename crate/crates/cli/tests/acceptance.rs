//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use toric_fano::classify::{classify, line_count_bound_report, ComponentDescriptor, LineCount, ScrollForm};
use toric_fano::lattice::enumerate::polygon_classes_in_box;
use toric_fano::lattice::oracle::{gamma_geometric, mu_by_height_count, Side};
use toric_fano::lattice::{
    edge_invariants, hull, is_scroll_width, is_smooth, primitive_edges, LatticePoint, LatticePolygon,
    LatticeVector, UnimodularAffineMap,
};
use toric_fano::symbolic::Field;
use toric_fano_cli::corpus::{corpus, lookup};
use toric_fano_cli::verify_document;

const RANDOM_PAIRS: usize = 500;
const SEED: u64 = 0x7061_6972_735f_3530;
const ENUMERATION_BOX: (i64, i64) = (-3, 3);
const VERIFY_DEGREE_BOUND: u32 = 4;
const VERIFY_BUDGET: Duration = Duration::from_secs(300);

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    use ComponentDescriptor::*;
    let line_point = Disjoint(vec![ProjectiveLine, ReducedPoint]);
    let table = [
        ((1, 0), ProjectivePlane),
        ((1, 1), Disjoint(vec![ProjectiveLine, ProjectiveLine])),
        ((2, 0), LineTimesDoublePoint),
        ((3, 0), LineTimesDoublePoint),
        ((2, 1), line_point.clone()),
        ((5, 1), line_point),
        ((2, 2), ProjectiveLine),
        ((4, 3), ProjectiveLine),
    ];
    for ((a, b), want) in &table {
        let p = ScrollForm::polygon(&BigInt::from(*a), &BigInt::from(*b)).map_err(|e| e.to_string())?;
        let got = classify(&p).map_err(|e| e.to_string())?.global;
        ensure(got.as_ref() == Some(want), || format!("P_{{{a},{b}}}: got {got:?}, want {want}"))?;
    }
    Ok(format!("{} scrolls match", table.len()))
}

fn fat(a: i64, b: i64) -> ComponentDescriptor {
    ComponentDescriptor::fat_point_product(a.into(), b.into())
}

fn criterion_2() -> Check {
    use ComponentDescriptor::*;
    let cases = [
        ("dp6-hexagon", 6, vec![ReducedPoint; 6]),
        ("dp5-pentagon", 10, vec![ReducedPoint, ReducedPoint, FatPoint(2.into()), FatPoint(2.into()), fat(2, 2)]),
        ("dp4-square", 16, vec![fat(2, 2); 4]),
        ("dp3-cubic", 27, vec![fat(3, 3); 3]),
        ("dp2-type", 12, vec![fat(2, 3); 2]),
    ];
    let mut seen = Vec::new();
    for (name, total, mut comps) in cases {
        let p = lookup(name).ok_or(format!("{name} missing from corpus"))?.polygon;
        let d = classify(&p).map_err(|e| e.to_string())?;
        comps.sort();
        ensure(d.total_degree == Some(BigInt::from(total)), || format!("{name}: total {:?}", d.total_degree))?;
        ensure(d.component_multiset() == comps, || format!("{name}: components {}", d.summary()))?;
        seen.push(total.to_string());
    }
    Ok(format!("degrees {}", seen.join(", ")))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut edges = 0;
    for e in corpus() {
        let r = verify_document(&e.document(), VERIFY_DEGREE_BOUND, &Field::Rational).map_err(|err| format!("{}: {err}", e.name))?;
        let v = r.verification.expect("verification section");
        for er in &v.edges {
            ensure(er.ok(), || {
                format!(
                    "{} edge {}: forward {} backward {} chart {} expected {}",
                    e.name, er.edge_index, er.forward_ok, er.backward_ok, er.chart, er.expected_chart
                )
            })?;
        }
        edges += v.edges.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= VERIFY_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} polygons, {edges} edges certified at D = {VERIFY_DEGREE_BOUND} over QQ in {elapsed:.2?}", corpus().len()))
}

fn criterion_4(classes: &[LatticePolygon]) -> Check {
    let mut smooth = 0;
    for p in classes.iter().filter(|p| is_smooth(p) && !is_scroll_width(p)) {
        let d = classify(p).map_err(|e| e.to_string())?;
        ensure(d.components.iter().all(|c| c.component == ComponentDescriptor::ReducedPoint), || {
            format!("{p}: {}", d.summary())
        })?;
        smooth += 1;
    }
    Ok(format!("{smooth} smooth non-scroll classes of {} are reduced", classes.len()))
}

fn random_map(rng: &mut ChaCha8Rng) -> UnimodularAffineMap {
    let mut m = UnimodularAffineMap::identity();
    for _ in 0..rng.gen_range(0..8) {
        let k = rng.gen_range(-4i64..=4);
        let g = match rng.gen_range(0..4) {
            0 => [[1, k], [0, 1]],
            1 => [[1, 0], [k, 1]],
            2 => [[0, 1], [1, 0]],
            _ => [[-1, 0], [0, 1]],
        };
        m = UnimodularAffineMap::from_i64(g, (0, 0)).expect("unimodular").compose(&m);
    }
    let t = LatticeVector::new(rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
    UnimodularAffineMap::translation_by(t).compose(&m)
}

fn random_hull(rng: &mut ChaCha8Rng) -> LatticePolygon {
    loop {
        let n = rng.gen_range(3..=7);
        let pts: Vec<LatticePoint> =
            (0..n).map(|_| LatticePoint::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3))).collect();
        if let Ok(p) = hull(&pts) {
            return p;
        }
    }
}

type Fingerprint = (Vec<ComponentDescriptor>, Option<BigInt>, Option<bool>, LineCount);

fn fingerprint(p: &LatticePolygon) -> Result<Fingerprint, String> {
    let d = classify(p).map_err(|e| e.to_string())?;
    Ok((d.component_multiset(), d.total_degree, d.reduced, d.line_count))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let entries = corpus();
    let (mut from_corpus, mut from_hulls) = (0, 0);
    for i in 0..RANDOM_PAIRS {
        let p = if i % 2 == 0 {
            from_corpus += 1;
            entries[rng.gen_range(0..entries.len())].polygon.clone()
        } else {
            from_hulls += 1;
            random_hull(&mut rng)
        };
        let m = random_map(&mut rng);
        let q = p.apply_map(&m);
        let (a, b) = (fingerprint(&p)?, fingerprint(&q)?);
        ensure(a == b, || format!("pair {i}: {p} under {m}: {a:?} vs {b:?}"))?;
    }
    Ok(format!("{RANDOM_PAIRS} pairs ({from_corpus} corpus, {from_hulls} random hulls), seed {SEED:#x}"))
}

fn criterion_6(classes: &[LatticePolygon]) -> Check {
    let per_class = |p: &LatticePolygon| -> Result<usize, String> {
        let edges = primitive_edges(p);
        for e in &edges {
            let inv = edge_invariants(p, e).map_err(|err| err.to_string())?;
            let gb = gamma_geometric(p, e, Side::Left);
            let gc = gamma_geometric(p, e, Side::Right);
            let mu = mu_by_height_count(p, e);
            ensure(inv.gamma_b == gb && inv.gamma_c == gc && inv.mu == mu, || {
                format!("{p} edge {}: formula {inv:?}, oracle ({mu}, {gb}, {gc})", e.index)
            })?;
        }
        Ok(edges.len())
    };
    let edges: usize = classes.par_iter().map(per_class).collect::<Result<Vec<_>, _>>()?.into_iter().sum();
    Ok(format!("{edges} primitive edges over {} classes", classes.len()))
}

fn criterion_7() -> Check {
    let p = lookup("veronese").ok_or("veronese missing")?.polygon;
    let d = classify(&p).map_err(|e| e.to_string())?;
    ensure(d.is_empty() && d.components.is_empty(), || format!("components {}", d.summary()))?;
    ensure(d.total_degree == Some(BigInt::from(0)), || format!("degree {:?}", d.total_degree))?;
    Ok("0 components, degree 0".to_string())
}

fn criterion_8() -> Check {
    let golden = [
        (
            "dp3-cubic",
            "at most 27 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 3 lines",
        ),
        (
            "dp4-square",
            "at most 16 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 4 lines",
        ),
        (
            "dp5-pentagon",
            "at most 10 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 5 lines",
        ),
    ];
    for (name, want) in golden {
        let p = lookup(name).ok_or(format!("{name} missing"))?.polygon;
        let got = line_count_bound_report(&classify(&p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: {got}"))?;
    }
    Ok("bounds 27, 16, 10".to_string())
}

fn main() -> ExitCode {
    let t = Instant::now();
    let classes = polygon_classes_in_box(ENUMERATION_BOX.0, ENUMERATION_BOX.1);
    println!("enumerated {} classes in [{}, {}]^2 in {:.2?}", classes.len(), ENUMERATION_BOX.0, ENUMERATION_BOX.1, t.elapsed());

    let criteria: Vec<(u32, Box<dyn Fn() -> Check + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(|| criterion_4(&classes))),
        (5, Box::new(criterion_5)),
        (6, Box::new(|| criterion_6(&classes))),
        (7, Box::new(criterion_7)),
        (8, Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(msg) => println!("criterion {n}: PASS ({msg}) [{:.2?}]", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({msg}) [{:.2?}]", t.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
