//! Acceptance report: one PASS/FAIL line per criterion, with the pinned
//! tolerance and the achieved value.
//!
//! A criterion marked `known_gap` is evaluated and printed exactly like the
//! others, but its failure does not change the exit status; the README
//! explains each of them. Any other failure exits with status 1.

use std::f64::consts::PI;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};

use plasmon_casimir::dispersion::{single_dos, solve_z_plus, Branches};
use plasmon_casimir::energy::{
    alpha_constants, b_coefficient, default_oracle_grid, default_oracle_k_max, eta_plasmonic,
    eta_plasmonic_oracle, eta_split, eta_total, gamma_constant, plasmonic_energy_maximum,
    plasmonic_sign_change, short_distance_fit, SplitScheme,
};
use plasmon_casimir::optics::{dispersion_d, FieldPoint, Polarization};
use plasmon_casimir::{aleph, Branch, QuadratureSpec, ScaledParams};

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
    known_gap: bool,
}

fn within(value: f64, target: f64, tol: f64) -> bool {
    (value - target).abs() <= tol
}

fn params(wp: f64) -> ScaledParams {
    ScaledParams::new(wp).expect("positive Ω_p")
}

fn run() -> Result<Vec<Outcome>, plasmon_casimir::Error> {
    let spec = QuadratureSpec::default();
    let mut out = Vec::new();
    let mut push = |id, title, passed, detail: String, known_gap| {
        out.push(Outcome {
            id,
            title,
            passed,
            detail,
            known_gap,
        })
    };

    let al = aleph();
    push(
        "1",
        "aleph constant",
        within(al, 5.805_276_2, 1e-6),
        format!("aleph = {al:.9} (target 5.8052762 ± 1e-6)"),
        false,
    );

    let alpha = alpha_constants();
    let wp_small = 1e-3;
    let alpha_total = 2.0 * PI * eta_total(params(wp_small), &spec)? / wp_small;
    push(
        "2",
        "short-distance slope alpha",
        within(alpha.alpha, 1.790, 0.002) && within(alpha_total, alpha.alpha, 0.005),
        format!(
            "alpha = {:.6} (1.790 ± 0.002); 2*pi*eta_total/Omega_p at {wp_small} = {alpha_total:.6} (alpha ± 0.005)",
            alpha.alpha
        ),
        false,
    );

    let split_sum = alpha.alpha_plus + alpha.alpha_minus;
    push(
        "3",
        "branch split of alpha",
        within(alpha.alpha_plus, -12.225, 0.01)
            && within(alpha.alpha_minus, 14.015, 0.01)
            && within(split_sum, alpha.alpha, 1e-3),
        format!(
            "alpha+ = {:.5} (-12.225 ± 0.01), alpha- = {:.5} (14.015 ± 0.01), sum - alpha = {:.2e} (± 1e-3)",
            alpha.alpha_plus,
            alpha.alpha_minus,
            split_sum - alpha.alpha
        ),
        false,
    );

    let b = b_coefficient();
    let fit = short_distance_fit();
    push(
        "4",
        "third-order coefficients a, b",
        within(b, 1.026, 0.001) && within(fit.a, 0.63, 0.02),
        format!("b = {b:.6} (1.026 ± 0.001), fitted a = {:.5} (0.63 ± 0.02) over Omega_p in [0.02, 0.2]", fit.a),
        false,
    );

    let gamma = gamma_constant();
    let parts_ok = gamma
        .parts
        .iter()
        .zip([8.90, -7.23, 28.09])
        .all(|(got, want)| within(*got, want, 0.05));
    push(
        "5",
        "large-distance constant Gamma",
        within(gamma.gamma, 29.75, 0.05) && parts_ok,
        format!(
            "Gamma = {:.4} (29.75 ± 0.05), parts = ({:.4}, {:.4}, {:.4}) (8.90, -7.23, 28.09 each ± 0.05)",
            gamma.gamma, gamma.parts[0], gamma.parts[1], gamma.parts[2]
        ),
        false,
    );

    let crossing = plasmonic_sign_change(0.05, 0.12, &spec)?;
    push(
        "6",
        "sign change of eta_pl",
        within(crossing, 0.08, 0.01),
        format!("L/lambda_p = {crossing:.5} (0.08 ± 0.01)"),
        false,
    );

    let maximum = plasmonic_energy_maximum(0.1, 0.3, &spec)?;
    push(
        "7",
        "maximum of E_pl",
        within(maximum, 0.16, 0.01),
        format!("L/lambda_p = {maximum:.5} (0.16 ± 0.01)"),
        false,
    );

    let w400 = 400.0f64;
    let eta_b = eta_split(params(w400), SplitScheme::Bordag, &spec)? / w400.sqrt();
    let eta_l = eta_split(params(w400), SplitScheme::LenacLightLine, &spec)? / w400.sqrt();
    let extrapolated = |scheme| -> Result<f64, plasmon_casimir::Error> {
        let a = eta_split(params(1600.0), scheme, &spec)? / 40.0;
        let b = eta_split(params(6400.0), scheme, &spec)? / 80.0;
        Ok((4.0 * b - a) / 3.0)
    };
    let (inf_b, inf_l) = (
        extrapolated(SplitScheme::Bordag)?,
        extrapolated(SplitScheme::LenacLightLine)?,
    );
    push(
        "8",
        "alternative splittings at Omega_p = 400",
        within(eta_b, 1.6240, 0.003) && within(eta_l, -1.6600, 0.003),
        format!(
            "eta_B/sqrt = {eta_b:.5} (1.6240 ± 0.003), eta_L/sqrt = {eta_l:.5} (-1.6600 ± 0.003); \
             O(1/Omega_p) extrapolation from 1600, 6400: {inf_b:.5}, {inf_l:.5}"
        ),
        true,
    );

    let mut worst: f64 = 0.0;
    for wp in [0.2, 1.0, 5.0, 20.0] {
        let p = params(wp);
        let closed = eta_plasmonic(p, &spec)?.total;
        let oracle = eta_plasmonic_oracle(p, default_oracle_k_max(p), default_oracle_grid())?;
        worst = worst.max((closed - oracle).abs() / closed.abs());
    }
    push(
        "9",
        "closed form vs wavevector oracle",
        worst <= 1e-4,
        format!("max relative deviation over Omega_p in {{0.2, 1, 5, 20}} = {worst:.2e} (≤ 1e-4)"),
        false,
    );

    let low = solve_z_plus(params(0.01))? / 1e-4;
    let high = solve_z_plus(params(1e4))? / (PI * PI);
    push(
        "10",
        "z_+ limits",
        within(low, 1.0, 1e-3) && within(high, 1.0, 1e-3),
        format!("z_+(0.01)/Omega_p^2 = {low:.6}, z_+(1e4)/pi^2 = {high:.6} (1 ± 1e-3)"),
        false,
    );

    let mut rng = rand::rngs::StdRng::seed_from_u64(20_061_112);
    let mut worst_fact: f64 = 0.0;
    let mut evaluated = 0;
    while evaluated < 1000 {
        let wp = 10f64.powf(rng.random_range(-1.5..1.5));
        let w = rng.random_range(1e-3..2.0) * wp;
        let k = w + rng.random_range(1e-3..10.0);
        let pt = FieldPoint::real(w, k)?;
        let Some(direct) = dispersion_d(&pt, Polarization::TM, params(wp))?.value() else {
            continue;
        };
        let product = Branches::new(params(wp))?.tm_factorized(w, k)?;
        worst_fact = worst_fact.max((direct.re - product).abs() / direct.re.abs());
        evaluated += 1;
    }
    push(
        "11",
        "TM factorization identity",
        worst_fact <= 1e-10,
        format!("max relative deviation on {evaluated} random evanescent points = {worst_fact:.2e} (≤ 1e-10)"),
        false,
    );

    let br = Branches::new(params(1.0))?;
    let k = 25.0f64;
    let (wp_k, w0_k) = (
        br.omega_of_k(Branch::Plus, k)?,
        br.omega_of_k(Branch::Single, k)?,
    );
    let tail = (wp_k * wp_k - w0_k * w0_k) * k.exp() / 0.5;
    push(
        "12",
        "exponential tail law",
        within(tail, 1.0, 0.05),
        format!("[Omega_+^2 - Omega_0^2] e^K / (Omega_p^2/2) at K = 25 = {tail:.5} (1 ± 0.05)"),
        false,
    );

    let wp6 = 10.995_574;
    let p6 = params(wp6);
    let b6 = Branches::new(p6)?;
    let w_plus0 = b6.omega_of_k(Branch::Plus, 0.0)?;
    let mut gap_ok = true;
    for frac in [0.2, 0.5, 0.9] {
        let w = frac * w_plus0;
        gap_ok &= b6.dos_delta(Branch::Plus, w)?.delta_rho == -single_dos(w, p6)?;
    }
    let w1 = 0.01 * wp6;
    let d1 = b6.dos_delta(Branch::Minus, w1)?.delta_rho;
    let slope_ratio = d1 / (w1 / (PI * wp6));
    let d_half = b6.dos_delta(Branch::Minus, 0.5 * w1)?.delta_rho;
    let linear_ratio = d1 / (2.0 * d_half);
    let near = 0.99 * p6.omega_sp();
    let finite = [Branch::Plus, Branch::Minus].iter().all(|&a| {
        b6.dos_delta(a, near)
            .map(|s| s.delta_rho.is_finite())
            .unwrap_or(false)
    });
    push(
        "13",
        "density-of-states properties",
        gap_ok && d1 > 0.0 && within(slope_ratio, 1.0, 0.05) && within(linear_ratio, 1.0, 0.05) && finite,
        format!(
            "gap delta_rho_+ = -rho_0: {gap_ok}; delta_rho_- / (omega/(pi Omega_p)) at omega/omega_p = 0.01 = \
             {slope_ratio:.4}, linearity ratio = {linear_ratio:.4} (1 ± 0.05); finite at 0.99 omega_sp: {finite}"
        ),
        false,
    );

    let eta_far = eta_total(params(1e4), &spec)?;
    push(
        "14",
        "perfect-mirror limit",
        within(eta_far, 1.0, 0.01),
        format!("eta_total(1e4) = {eta_far:.6} (1 ± 0.01)"),
        false,
    );

    let w100 = 100.0f64;
    let b100 = eta_split(params(w100), SplitScheme::Bordag, &spec)? / 10.0;
    let l100 = eta_split(params(w100), SplitScheme::LenacLightLine, &spec)? / 10.0;
    push(
        "I1",
        "split coefficient ranges at Omega_p = 100",
        (1.60..=1.65).contains(&b100) && (-1.69..=-1.63).contains(&l100),
        format!("eta_B/sqrt = {b100:.5} in [1.60, 1.65], eta_L/sqrt = {l100:.5} in [-1.69, -1.63]"),
        true,
    );

    Ok(out)
}

fn main() -> ExitCode {
    let outcomes = match run() {
        Ok(o) => o,
        Err(e) => {
            println!("FAIL acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut unexpected = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = if !o.passed && o.known_gap {
            " [known gap, see README]"
        } else {
            ""
        };
        println!(
            "{status} criterion {:>2} {}: {}{note}",
            o.id, o.title, o.detail
        );
        if !o.passed && !o.known_gap {
            unexpected += 1;
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed ({unexpected} unexpected)",
        outcomes.len() - failed
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
