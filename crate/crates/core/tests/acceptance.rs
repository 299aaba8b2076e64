//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact, so the only
//! pinned tolerance is zero.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use orthoplex::arithmetic::spin::{
    gi, sbar, shat_generators, small_matrix_words, stabilizer_generator, STABILIZER_LABELS,
};
use orthoplex::arithmetic::{
    conjugate_by_j, discriminant, enumerate_mod8, epsilon_of, is_isotropic_at,
    is_positive_definite, local_classes, primes_below, qform_from_bend_vector, spin, MobiusPair,
};
use orthoplex::config::{bend_vector, builtin, check_dgm, check_gramian};
use orthoplex::groups::{
    apply, generators, is_orthogonal, verify_apollonian_relations, verify_dual_involutions,
    verify_platonic_relations, TableName,
};
use orthoplex::packing::{
    generate, missing_admissible, orbit_bend_vectors, Mode, PackingReport, PackingSpec,
};
use orthoplex::BendVector;
use rand::Rng;

const EXACT_TOLERANCE: i64 = 0;
const ORBIT_SAMPLES: usize = 1000;
const SPIN_SAMPLES: usize = 1000;
const SCAN_CAP: i64 = 500;
const SCAN_SECONDS: u64 = 600;

const B_P0: [i64; 52] = [
    0, 1, 2, 4, 5, 6, 8, 9, 10, 12, 13, 14, 16, 17, 18, 20, 21, 22, 24, 25, 26, 28, 29, 30, 32, 33,
    34, 36, 37, 38, 40, 41, 42, 44, 45, 46, 48, 49, 50, 52, 53, 54, 56, 57, 58, 60, 61, 62, 64, 65,
    66, 68,
];
const B_P1: [i64; 52] = [
    -1, 2, 3, 4, 6, 7, 8, 10, 11, 12, 14, 15, 16, 18, 19, 20, 22, 23, 24, 26, 27, 28, 30, 31, 32,
    34, 35, 36, 38, 39, 40, 42, 43, 44, 46, 47, 48, 50, 51, 52, 54, 55, 56, 58, 59, 60, 62, 63, 64,
    66, 67, 68,
];
const B_P7D: [i64; 33] = [
    -7, 12, 17, 20, 22, 24, 25, 29, 30, 33, 34, 37, 38, 40, 41, 44, 46, 48, 49, 50, 52, 53, 54, 56,
    58, 60, 61, 62, 64, 65, 66, 68, 69,
];
const B_P7D_HIGH: [i64; 38] = [
    200, 201, 202, 204, 205, 206, 208, 209, 210, 212, 213, 214, 216, 217, 218, 220, 221, 222, 224,
    225, 226, 228, 229, 230, 232, 233, 234, 236, 237, 238, 240, 241, 242, 244, 245, 246, 248, 249,
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bends(seed: &str, cap: i64, runs: &mut Vec<PackingReport>) -> Result<Vec<i64>, String> {
    let r = generate(&PackingSpec::new(
        builtin(seed).unwrap(),
        cap,
        Mode::BendOnly,
    ))
    .map_err(|e| e.to_string())?;
    let out = r.bends.clone();
    runs.push(r);
    Ok(out)
}

fn bend_sets(runs: &mut Vec<PackingReport>) -> Outcome {
    for (seed, cap, expected) in [
        ("F0", 68, &B_P0[..]),
        ("F1", 68, &B_P1[..]),
        ("F7d", 69, &B_P7D[..]),
    ] {
        let got = bends(seed, cap, runs)?;
        ensure(got == expected, || {
            format!("{seed} at cap {cap}: got {got:?}")
        })?;
    }
    let high: Vec<i64> = bends("F7d", 250, runs)?
        .into_iter()
        .filter(|b| (200..250).contains(b))
        .collect();
    ensure(high == B_P7D_HIGH, || {
        format!("F7d block [200, 250): got {high:?}")
    })?;
    Ok(format!(
        "P0, P1 to 68, P7d to 69 and its [200, 250) block match with tolerance {EXACT_TOLERANCE}"
    ))
}

fn mod8_counts() -> Outcome {
    let r = enumerate_mod8();
    let counts = [
        r.solutions,
        r.eight_tuples,
        r.with_odd_entry,
        r.pair_ordered,
        r.representatives.len(),
    ];
    ensure(counts == [3584, 1792, 1536, 240, 24], || {
        format!("stage counts {counts:?}")
    })?;
    ensure(r.representatives == common::MOD8_REPRESENTATIVES, || {
        format!("representatives {:?}", r.representatives)
    })?;
    let classes: BTreeSet<[u8; 8]> = r.mod4_classes.iter().copied().collect();
    let expected = BTreeSet::from([[0, 0, 1, 1, 2, 2, 1, 1], [0, 0, 3, 3, 2, 2, 3, 3]]);
    ensure(classes == expected, || format!("mod-4 classes {classes:?}"))?;
    Ok("3584 / 1792 / 1536 / 240 / 24, two classes mod 4".into())
}

fn identities() -> Outcome {
    let mut rng = common::rng(2024);
    for (name, f) in common::seeds() {
        ensure(check_gramian(&f) && check_dgm(&f), || {
            format!("{name} fails an identity")
        })?;
        for i in 0..ORBIT_SAMPLES {
            let len = rng.gen_range(1..=12);
            let g = common::random_apollonian_word(&mut rng, len);
            let image = apply(&g, &f);
            ensure(check_gramian(&image) && check_dgm(&image), || {
                format!("{name}, sample {i}, word {:?}", g.word())
            })?;
        }
    }
    let mut count = 0;
    for t in [
        TableName::Platonic,
        TableName::Apollonian,
        TableName::DualApollonian,
        TableName::Stabilizer1Oriented,
    ] {
        for g in &generators(t).generators {
            ensure(is_orthogonal(&g.matrix), || {
                format!("{t} {} is not in O(Q_F)", g.label)
            })?;
            count += 1;
        }
    }
    let platonic = verify_platonic_relations();
    let apollonian = verify_apollonian_relations();
    let dual = verify_dual_involutions();
    ensure(platonic.checks.len() == 10 && platonic.all_hold(), || {
        "Platonic relations".into()
    })?;
    ensure(
        apollonian.checks.len() == 48 && apollonian.all_hold(),
        || "Apollonian relations".into(),
    )?;
    ensure(dual.all_hold(), || "dual involutions".into())?;
    Ok(format!(
        "3 seeds + {} orbit matrices, {count} generators, 10 + 48 relations",
        3 * ORBIT_SAMPLES
    ))
}

fn random_unimodular(rng: &mut impl Rng) -> MobiusPair {
    let mut m = MobiusPair::identity();
    for _ in 0..rng.gen_range(0..6) {
        let z = gi(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let step = match rng.gen_range(0..3) {
            0 => MobiusPair::new(gi(1, 0), z, gi(0, 0), gi(1, 0)),
            1 => MobiusPair::new(gi(1, 0), gi(0, 0), z, gi(1, 0)),
            _ => MobiusPair::new(gi(0, 1), gi(0, 0), gi(0, 0), gi(0, -1)),
        };
        m = &m * &step.unwrap();
    }
    m
}

fn spin_pipeline() -> Outcome {
    let hats = shat_generators();
    for label in STABILIZER_LABELS {
        let s = stabilizer_generator(label).ok_or_else(|| format!("no generator {label}"))?;
        let conj = conjugate_by_j(s).map_err(|e| e.to_string())?;
        let hat = &hats.iter().find(|(l, _)| *l == label).unwrap().1;
        let rho = spin(&sbar(label).unwrap());
        ensure(&conj == hat && &rho == hat, || {
            format!("{label}: J·S·J⁻¹ = {conj}, ρ(S̄) = {rho}")
        })?;
    }
    let mut rng = common::rng(17);
    for i in 0..SPIN_SAMPLES {
        let (a, b) = (random_unimodular(&mut rng), random_unimodular(&mut rng));
        let ok = spin(&(&a * &b)) == &spin(&a) * &spin(&b) && spin(&a.neg()) == spin(&a);
        ensure(ok, || format!("sample {i}: {a} · {b}"))?;
    }
    let words = small_matrix_words();
    ensure(words.len() >= 12 && words.iter().all(|w| w.holds()), || {
        "a small-matrix word fails".into()
    })?;
    Ok(format!(
        "7 generators, {SPIN_SAMPLES} products, {} words",
        words.len()
    ))
}

fn qform_suite() -> Outcome {
    let primes = primes_below(100);
    let mut vectors = 0;
    for (name, f) in common::seeds() {
        for bv in orbit_bend_vectors(&f, 20).map_err(|e| e.to_string())? {
            let q = qform_from_bend_vector(&bv).map_err(|e| format!("{name} {bv}: {e}"))?;
            let b = bv.entries()[0].clone();
            let two_b = &b * 2;
            ensure(q.binary_discriminant() == -(&b * &b), || {
                format!("{bv}: B²+C²−AD")
            })?;
            ensure(
                discriminant(&q) == &two_b * &two_b * &two_b * &two_b,
                || format!("{bv}: Δ"),
            )?;
            ensure(is_positive_definite(&q) == !b.is_zero(), || {
                format!("{bv}: definiteness")
            })?;
            for &p in &primes {
                let iso = is_isotropic_at(&q, p).map_err(|e| e.to_string())?;
                let w = iso
                    .witness
                    .ok_or_else(|| format!("{bv}: anisotropic at {p}"))?;
                let eta = w.map(BigInt::from);
                let value = q.eval(&eta);
                let nonzero = w.iter().any(|&x| x % p != 0);
                ensure(iso.isotropic && nonzero && (value % p).is_zero(), || {
                    format!("{bv}: witness {w:?} mod {p}")
                })?;
            }
            let expected =
                u8::try_from((&bv.entries()[0] + &bv.entries()[1]).mod_floor(&BigInt::from(4)))
                    .unwrap();
            let classes = local_classes(&q);
            ensure(classes == BTreeSet::from([expected]), || {
                format!("{bv}: local classes {classes:?}")
            })?;
            vectors += 1;
        }
    }
    Ok(format!(
        "{vectors} bend vectors, {} primes each",
        primes.len()
    ))
}

fn scan(runs: &mut Vec<PackingReport>) -> Outcome {
    let start = Instant::now();
    let mut detail = Vec::new();
    for (seed, from) in [("F1", 2), ("F7d", 200)] {
        let r = generate(&PackingSpec::new(
            builtin(seed).unwrap(),
            SCAN_CAP,
            Mode::BendOnly,
        ))
        .map_err(|e| e.to_string())?;
        ensure(r.frontier_exhausted, || {
            format!("{seed}: frontier not exhausted")
        })?;
        let missing = missing_admissible(&r, from, SCAN_CAP).map_err(|e| e.to_string())?;
        ensure(missing.is_empty(), || {
            format!("{seed}: missing {missing:?}")
        })?;
        detail.push(format!(
            "{seed} [{from}, {SCAN_CAP}] ({} configurations)",
            r.configurations
        ));
        runs.push(r);
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= SCAN_SECONDS as f64, || format!("took {secs:.1}s"))?;
    Ok(format!("{} complete in {secs:.2}s", detail.join(", ")))
}

fn mode_agreement(runs: &mut Vec<PackingReport>) -> Outcome {
    for seed in ["F1", "F7d"] {
        let f = builtin(seed).unwrap();
        let b = generate(&PackingSpec::new(f.clone(), 30, Mode::BendOnly))
            .map_err(|e| e.to_string())?;
        let g = generate(&PackingSpec::new(f, 30, Mode::Geometric)).map_err(|e| e.to_string())?;
        ensure(b.bends == g.bends, || {
            format!("{seed}: {:?} vs {:?}", b.bends, g.bends)
        })?;
        runs.push(b);
        runs.push(g);
    }
    Ok("F1 and F7d at cap 30".into())
}

fn obstruction(runs: &[PackingReport]) -> Outcome {
    let mut total = 0;
    for r in runs {
        ensure(r.obstruction.is_some(), || {
            "a run has no obstruction class".into()
        })?;
        ensure(r.obstruction_violations.is_empty(), || {
            format!("violations {:?}", r.obstruction_violations)
        })?;
        total += r.bends.len();
    }
    let mut rng = common::rng(99);
    for (name, f) in common::seeds() {
        let bv = bend_vector(&f).to_integral().unwrap();
        let class = epsilon_of(&bv.eight()).map_err(|e| e.to_string())?;
        for _ in 0..ORBIT_SAMPLES {
            let len = rng.gen_range(1..=12);
            let g = common::random_apollonian_word(&mut rng, len);
            let image = BendVector(g.matrix().mul_vec(bv.entries()).try_into().unwrap());
            for b in image.eight() {
                ensure(class.admits(&b), || {
                    format!("{name}: bend {b} under {:?}", g.word())
                })?;
                total += 1;
            }
        }
    }
    Ok(format!(
        "{} runs, {total} bends checked, 0 violations",
        runs.len()
    ))
}

fn main() {
    let mut runs = Vec::new();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("bend-set regression", bend_sets(&mut runs)),
        ("mod-8 filtration", mod8_counts()),
        ("identity suites", identities()),
        ("spin pipeline", spin_pipeline()),
        ("quadratic-form suite", qform_suite()),
        ("local-global scan", scan(&mut runs)),
        ("mode agreement", mode_agreement(&mut runs)),
    ];
    results.push(("obstruction soundness", obstruction(&runs)));
    let mut failed = 0;
    for (n, (name, outcome)) in results.into_iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
