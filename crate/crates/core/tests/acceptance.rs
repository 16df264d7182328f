//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use artinder_core::algebra::LocalAlgebra;
use artinder_core::bounds::{count_order_ideals, enumerate_staircases, schulze_criterion};
use artinder_core::catalog::{chain, example, square_zero, EXAMPLES};
use artinder_core::lie::{cartan_solvable, close_under_bracket, is_scalar_image};
use artinder_core::linalg::{rat, Field, QMatrix, Rational};
use artinder_core::nullindex::{differential_identity_check, Certificate, NullIndexConfig, NullIndexVerdict};
use artinder_core::poly::Presentation;
use artinder_core::report::{analyze, Analysis};
use artinder_core::scan::{analyze_corpus, ScanConfig};
use num_traits::Zero;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn run(p: &Presentation) -> Analysis {
    analyze(p, &NullIndexConfig::default()).expect("corpus algebras analyze")
}

fn catalog(name: &str) -> Analysis {
    run(&example(name).unwrap())
}

fn corpus() -> Vec<(String, Analysis)> {
    let mut config = ScanConfig::new(7, 3);
    config.include_catalog = true;
    analyze_corpus(&config).unwrap().into_iter().map(|(e, a)| (e.label, a)).collect()
}

/// `dim Der(A)` from all ordered pairs on the full basis, unknowns in `gl(A)`.
fn gl_oracle(a: &LocalAlgebra) -> usize {
    let n = a.dim();
    let t = a.structure_tensor();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for o in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for p in 0..n {
                    row[o * n + p] += &t[i][j][p];
                    row[p * n + i] -= &t[p][j][o];
                    row[p * n + j] -= &t[i][p][o];
                }
                rows.push(row);
            }
        }
    }
    n * n - QMatrix::from_rows(rows).rank()
}

fn criterion1() -> Outcome {
    for n in 3..=8u32 {
        let a = run(&chain(n));
        let n = n as usize;
        ensure!(a.derivations.dim() == n - 1, "dim Der = {} for n = {n}", a.derivations.dim());
        ensure!(a.algebra.is_gorenstein(), "n = {n} not Gorenstein");
        let p = a.index_polynomial.as_ref().unwrap().render();
        ensure!(p == format!("x1^{}", n - 1), "P_A = {p} for n = {n}");
        ensure!(
            a.null_index == Some(NullIndexVerdict::Full { certificate: Certificate::TrivialV }),
            "verdict for n = {n}"
        );
        ensure!(a.solvable(), "n = {n} not solvable");
        ensure!(a.christophersen.equality && a.christophersen.is_chain, "christophersen for n = {n}");
    }
    Ok("n = 3..8: dim Der = n-1, P_A = x1^(n-1), full(trivial-V), solvable, chain equality".into())
}

fn criterion2() -> Outcome {
    for k in 2..=4 {
        let a = run(&square_zero(k));
        ensure!(a.derivations.dim() == k * k, "dim Der = {} for n-1 = {k}", a.derivations.dim());
        let b = &a.perepechko;
        ensure!(b.holds == Some(true) && b.lhs == k * k && b.rhs == k * k, "perepechko {} >= {}", b.lhs, b.rhs);
    }
    Ok("n-1 = 2, 3, 4: dim Der = (n-1)^2 = (n-1)*(n-1)".into())
}

fn criterion3() -> Outcome {
    let a = catalog("example3");
    ensure!(a.algebra.dim() == 6 && a.algebra.nilpotency_index() == 3, "n, r");
    ensure!(a.algebra.is_gorenstein(), "not Gorenstein");
    let p = a.index_polynomial.as_ref().unwrap().render();
    ensure!(p == "x1^3 + x2^3", "P_A = {p}");
    ensure!(is_scalar_image(&a.derivations.rho_image()).is_some(), "rho-image not scalar");
    ensure!(a.null_index.as_ref().unwrap().label() == "full(scalar-image)", "verdict");
    ensure!(a.der.is_solvable() && cartan_solvable(&a.der), "solvability");
    Ok(format!("n = 6, r = 3, P_A = {p}, full(scalar-image), derived series {:?}, Cartan solvable", a.der.derived_series()))
}

fn criterion4() -> Outcome {
    let a = catalog("example4");
    ensure!(a.algebra.dim() == 5, "n");
    let ip = a.index_polynomial.as_ref().unwrap();
    ensure!(ip.render() == "x1^3", "P_A = {}", ip.render());
    let Some(NullIndexVerdict::NotFull { witness }) = &a.null_index else {
        return Err("verdict is not not-full".into());
    };
    ensure!(witness.verify(&a.derivations, ip), "witness does not re-verify");
    let f = witness.field();
    ensure!(witness.eigenbasis.len() == 1, "eigenspace dimension {}", witness.eigenbasis.len());
    let v = &witness.eigenbasis[0];
    ensure!(f.is_zero(&v[0]) && !f.is_zero(&v[1]), "eigenspace is not <(0,1)>");
    ensure!(a.solvable(), "Der not solvable");
    let s = schulze_criterion(&a.presentation, a.algebra.nilpotency_index());
    ensure!((s.k, s.l, s.dim_i_mod_pi) == (2, 2, 2) && s.hypothesis, "schulze {:?}", s);
    let lambda = witness.rational_eigenvalue().map(|l| l.to_string()).unwrap_or_default();
    Ok(format!("P_A = x1^3, not-full with eigenspace <(0,1)> at eigenvalue {lambda}, solvable, Schulze (2,2,2), 2 < 3"))
}

fn criterion5() -> Outcome {
    let a = catalog("example5");
    ensure!(a.algebra.dim() == 5, "n");
    let oracle = gl_oracle(&a.algebra);
    ensure!(a.derivations.dim() == 7 && oracle == 7, "dim Der = {}, oracle {oracle}", a.derivations.dim());
    let series = a.der.derived_series();
    ensure!(series == [7, 6], "derived series {series:?}");
    ensure!(!cartan_solvable(&a.der) && !a.der.is_solvable(), "solvable");
    // the so_3 factor: Der' = so_3 ⋉ Q^3 and ρ(Der)' = so_3
    let core = a.der.perfect_core();
    let radical = core.killing_kernel();
    ensure!(radical.dim() == 3 && radical.is_abelian(), "radical of Der' has dim {}", radical.dim());
    let image = close_under_bracket(3, &a.derivations.rho_image()).unwrap();
    let levi = image.perfect_core();
    ensure!(levi.dim() == 3 && levi.killing_form_nondegenerate(), "rho(Der)' dim {}", levi.dim());
    ensure!(levi.basis().iter().all(|x| x.transpose() == x.scale(&rat(-1))), "rho(Der)' not antisymmetric");
    let p = a.index_polynomial.as_ref().unwrap().render();
    ensure!(p == "x1^2 + x2^2 + x3^2", "P_A = {p}");
    let Some(NullIndexVerdict::NotFull { witness }) = &a.null_index else {
        return Err("verdict is not not-full".into());
    };
    ensure!(
        witness.verify(&a.derivations, a.index_polynomial.as_ref().unwrap()) && witness.minimal_polynomial.degree() == Some(2),
        "witness"
    );
    ensure!((a.perepechko.lhs, a.perepechko.rhs) == (7, 3), "perepechko");
    Ok(format!(
        "dim Der = 7 (oracle 7); derived series of Der is {series:?}, stopping at Der' = so_3 ⋉ Q^3 (dim 6, not 3); dim 3 is reached by ρ(Der)' = so_3 with nondegenerate trace form; Cartan: not solvable; witness over Q[θ]/({}); Perepechko 7 >= 3",
        witness.minimal_polynomial.render("θ")
    ))
}

fn criterion6(corpus: &[(String, Analysis)]) -> Outcome {
    let mut full = 0;
    let mut gorenstein = 0;
    for (label, a) in corpus {
        let Some(v) = &a.null_index else { continue };
        gorenstein += 1;
        if v.is_full() {
            full += 1;
            ensure!(a.solvable(), "{label}: full but Der not solvable");
        }
        ensure!(v.label() != "unknown", "{label}: verdict unknown");
    }
    Ok(format!("{gorenstein} Gorenstein algebras, {full} full, all full ones solvable"))
}

fn criterion7(corpus: &[(String, Analysis)]) -> Outcome {
    let mut checked = 0;
    for (label, a) in corpus {
        let Some(ip) = &a.index_polynomial else { continue };
        let d = &a.derivations;
        let full = a.null_index.as_ref().is_some_and(NullIndexVerdict::is_full);
        let annihilator = d.socle_annihilator();
        for x in annihilator.basis() {
            ensure!(d.kills_top_power(x), "{label}: m^(r-1) ξ(m) != 0");
            let rho = d.rho(x);
            ensure!(differential_identity_check(&ip.poly, &rho), "{label}: dP(v)(ρv) != 0");
            if full {
                ensure!(rho.is_nilpotent(), "{label}: ρ(ξ) not nilpotent");
            }
            checked += 1;
        }
        if full {
            let l = artinder_core::lie::MatrixLieAlgebra::new(d.ambient(), annihilator.basis()).unwrap();
            ensure!(l.is_solvable(), "{label}: socle annihilator not solvable");
        }
    }
    Ok(format!("{checked} annihilator basis derivations satisfy both identities"))
}

fn criterion8(corpus: &[(String, Analysis)]) -> Outcome {
    let (mut graded, mut schulze) = (0, 0);
    for (label, a) in corpus {
        ensure!(a.perepechko.holds == Some(true), "{label}: perepechko");
        if a.algebra.is_graded() {
            graded += 1;
            ensure!(a.yau.holds == Some(true), "{label}: yau");
        }
        if a.schulze.hypothesis {
            schulze += 1;
            ensure!(a.solvable(), "{label}: schulze hypothesis but not solvable");
        }
    }
    Ok(format!("Perepechko {0}/{0}, Yau {graded}/{graded} graded, {schulze} Schulze rows solvable", corpus.len()))
}

fn criterion9(corpus: &[(String, Analysis)]) -> Outcome {
    for (label, a) in corpus {
        let alg = &a.algebra;
        let n = alg.dim();
        let t = alg.structure_tensor();
        let e = |i: usize| (0..n).map(|k| if k == i { rat(1) } else { rat(0) }).collect::<Vec<_>>();
        for i in 0..n {
            for j in 0..n {
                ensure!(t[i][j] == t[j][i], "{label}: not commutative");
                for k in 0..n {
                    let left = alg.mul(&alg.mul(&e(i), &e(j)), &e(k));
                    let right = alg.mul(&e(i), &alg.mul(&e(j), &e(k)));
                    ensure!(left == right, "{label}: not associative");
                }
            }
        }
        ensure!(a.der.is_solvable() == cartan_solvable(&a.der), "{label}: derived series vs Cartan");
        let annihilator = a.derivations.socle_annihilator();
        let sub = artinder_core::lie::MatrixLieAlgebra::new(a.derivations.ambient(), annihilator.basis()).unwrap();
        ensure!(sub.is_solvable() == cartan_solvable(&sub), "{label}: annihilator derived series vs Cartan");
    }
    // partitions and plane partitions from their generating products
    let series = |w: fn(usize) -> usize| {
        let mut c = vec![0usize; 7];
        c[0] = 1;
        for k in 1..=6 {
            for _ in 0..w(k) {
                for i in k..=6 {
                    c[i] += c[i - k];
                }
            }
        }
        c
    };
    let (two, three) = (series(|_| 1), series(|k| k));
    for size in 1..=6 {
        ensure!(count_order_ideals(size, 2) == two[size], "2-var count at size {size}");
        ensure!(count_order_ideals(size, 3) == three[size], "3-var count at size {size}");
    }
    let post = enumerate_staircases(4, 2).iter().filter(|s| s.dim() == 4).count();
    ensure!(count_order_ideals(4, 2) == 5 && post == 3, "size-4 two-variable counts");
    Ok(format!("{} algebras commutative and associative, Cartan agrees, staircase counts match to size 6 (size 4: 5 -> 3)", corpus.len()))
}

fn criterion10() -> Outcome {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog");
    for (name, _) in EXAMPLES {
        let first = catalog(name).report(false).to_json();
        let second = catalog(name).report(false).to_json();
        ensure!(first == second, "{name}: output differs between runs");
        let golden = std::fs::read_to_string(format!("{root}/{name}.json")).map_err(|e| format!("{name}: {e}"))?;
        ensure!(first == golden, "{name}: differs from golden file");
    }
    Ok("report JSON for the five catalog files is byte-identical across runs and to the golden files".into())
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("chain algebras", Box::new(criterion1)),
        ("square-zero algebras", Box::new(criterion2)),
        ("x1^3 + x2^3 example", Box::new(criterion3)),
        ("not of full null-index", Box::new(criterion4)),
        ("non-solvable Der with so_3", Box::new(criterion5)),
        ("full => solvable on the corpus", Box::new(|| criterion6(&corpus))),
        ("socle-annihilator identities", Box::new(|| criterion7(&corpus))),
        ("bound theorems", Box::new(|| criterion8(&corpus))),
        ("engine cross-validation", Box::new(|| criterion9(&corpus))),
        ("golden-file determinism", Box::new(criterion10)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
