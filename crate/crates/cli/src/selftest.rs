//! Golden examples checked at run time, plus a seeded random sample of the
//! instantiation homomorphism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boolfactor::dyadic::{self, dyadic_inverse};
use boolfactor::factor::{self, FactorOptions};
use boolfactor::satsolve::{self, conjoin};
use boolfactor::{BoolExpr, DyadicInt, GenericInt, Instantiation, Term, VarSet};

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckResult = std::result::Result<(), String>;
type CheckFn = Box<dyn Fn() -> CheckResult>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn divide(a: i128, b: i128) -> std::result::Result<dyadic::Division, String> {
    dyadic::divides_exactly(&DyadicInt::from_int(a), &DyadicInt::from_int(b)).map_err(|e| e.to_string())
}

fn division_verdict(a: i128, b: i128, gamma: usize, exact: bool, quotient: u128) -> CheckResult {
    let d = divide(a, b)?;
    let q = d.quotient.to_u128_mod().map_err(|e| e.to_string())?;
    ensure(d.trace.gamma == gamma && d.exact == exact && q == quotient, || {
        format!("{a}/{b}: gamma {} exact {} quotient {q}", d.trace.gamma, d.exact)
    })
}

fn tableau_209_19() -> CheckResult {
    let d = divide(209, 19)?;
    let t = &d.trace;
    let m = |v: &DyadicInt| v.to_u128_mod().unwrap_or(u128::MAX);
    let window = |v: &DyadicInt, lo: usize| (m(v) >> lo) & 0b11111;
    let c = [(1, 0, 0b00010), (2, 1, 0b10000), (3, 2, 0b01010), (4, 3, 0b00100)];
    for (i, lo, want) in c {
        ensure(window(&t.steps[i].c, lo) == want, || format!("c({i}) differs"))?;
    }
    let borrows = [(1, 0b100), (2, 0b1001000), (3, 0b10000), (4, 0b100000)];
    for (i, want) in borrows {
        ensure(m(&t.steps[i].borrows) == want, || format!("borrows({i}) differs"))?;
    }
    Ok(())
}

fn bf_equation(n: u64, j: usize, want: &str) -> CheckResult {
    let inst = factor::bf_build(n, j).map_err(|e| e.to_string())?;
    let got = inst.e.to_string();
    ensure(got == want, || format!("N={n} j={j}: e = {got}"))
}

fn bf_factors(n: u64, want: (u64, u64)) -> CheckResult {
    let r = factor::bf_factor(n, &FactorOptions::default()).map_err(|e| e.to_string())?;
    let got = r.factor_set();
    ensure(got == vec![want], || format!("N={n}: {got:?}"))
}

fn mbf_factors(n: u64, want: (u64, u64)) -> CheckResult {
    let r = factor::mbf_factor_with_width(n, None, &FactorOptions::default()).map_err(|e| e.to_string())?;
    let got = r.factor_set();
    ensure(got == vec![want], || format!("N={n}: {got:?}"))
}

fn solver_instance() -> CheckResult {
    let e: BoolExpr = "x1*x2+x1*x3".parse().map_err(|e: boolfactor::Error| e.to_string())?;
    let system = conjoin([&e, &BoolExpr::var(3)]);
    let out = satsolve::solve_scarce(&system, VarSet::range(1, 4), satsolve::DEFAULT_BUDGET, true)
        .map_err(|e| e.to_string())?;
    let want = Instantiation::from_pairs(4, &[(1, true), (3, true)]);
    ensure(out.solutions == vec![want] && out.mu <= 1, || {
        format!("{:?}", out.solutions)
    })
}

fn random_generic(rng: &mut ChaCha8Rng, nvars: usize) -> GenericInt {
    let width = rng.gen_range(1..=4);
    let coeff = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(0..4);
        BoolExpr::from_terms((0..k).map(|_| Term::from_mask(rng.gen_range(0..1u64 << nvars))))
    };
    let coeffs = (0..width).map(|_| coeff(rng)).collect();
    let tail = coeff(rng);
    GenericInt::exact(coeffs, tail)
}

/// `Phi(a op b) = Phi(a) op Phi(b)` on random pairs drawn from `seed`.
pub fn homomorphism_sample(seed: u64, pairs: usize) -> CheckResult {
    const NVARS: usize = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..pairs {
        let a = random_generic(&mut rng, NVARS);
        let b = random_generic(&mut rng, NVARS);
        let err = |e: boolfactor::Error| format!("pair {k}: {e}");
        let (sum, diff, prod, neg) = (
            a.add(&b).map_err(err)?,
            a.sub(&b).map_err(err)?,
            a.mul(&b).map_err(err)?,
            a.negate().map_err(err)?,
        );
        for phi in Instantiation::all(NVARS) {
            let (x, y) = (a.instantiate(&phi).map_err(err)?, b.instantiate(&phi).map_err(err)?);
            let got = [&sum, &diff, &prod, &neg].map(|g| g.instantiate(&phi).unwrap_or(i128::MIN));
            ensure(got == [x + y, x - y, x * y, -x], || {
                format!("pair {k} ({a}, {b}) at {phi:?}")
            })?;
        }
    }
    Ok(())
}

/// Runs every check; randomised ones draw from `seed`.
pub fn run(seed: u64) -> Vec<Check> {
    let checks: Vec<(&'static str, CheckFn)> = vec![
        (
            "divide 209 19: exact, quotient 11",
            Box::new(|| division_verdict(209, 19, 4, true, 11)),
        ),
        ("divide 209 19: tableau rows", Box::new(tableau_209_19)),
        (
            "divide 209 21: quotient bits 1101, not exact",
            Box::new(|| division_verdict(209, 21, 4, false, 0b1101)),
        ),
        (
            "divide 209 17: not exact",
            Box::new(|| division_verdict(209, 17, 4, false, 0b0001)),
        ),
        (
            "divide 513 27: exact, quotient 19",
            Box::new(|| division_verdict(513, 27, 6, true, 19)),
        ),
        (
            "divide 7 1: quotient 7",
            Box::new(|| division_verdict(7, 1, 3, true, 7)),
        ),
        (
            "inverse 3 mod 2^8 = 171",
            Box::new(|| {
                let r = dyadic_inverse(&DyadicInt::from_int(3), 8).map_err(|e| e.to_string())?;
                ensure(r.to_u128_mod() == Ok(171), || format!("got {r}"))
            }),
        ),
        ("bf 21 level 0: e = x1", Box::new(|| bf_equation(21, 0, "x1"))),
        (
            "bf 77 level 0: e = x1*x2+x1*x3",
            Box::new(|| bf_equation(77, 0, "x1*x2+x1*x3")),
        ),
        ("bf 95 level 0: e = 0", Box::new(|| bf_equation(95, 0, "0"))),
        (
            "bf 95 level 1: e = x1*x2+x2",
            Box::new(|| bf_equation(95, 1, "x1*x2+x2")),
        ),
        ("factor 21 = 3 x 7", Box::new(|| bf_factors(21, (3, 7)))),
        ("factor 77 = 7 x 11", Box::new(|| bf_factors(77, (7, 11)))),
        ("factor 95 = 5 x 19", Box::new(|| bf_factors(95, (5, 19)))),
        ("mbf 77 = 7 x 11", Box::new(|| mbf_factors(77, (7, 11)))),
        ("solve x3 * (x1*x2+x1*x3)", Box::new(solver_instance)),
        (
            "random homomorphism sample",
            Box::new(move || homomorphism_sample(seed, 50)),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let r = f();
            Check {
                name,
                passed: r.is_ok(),
                detail: r.err().unwrap_or_default(),
            }
        })
        .collect()
}
