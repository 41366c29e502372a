//! SD and D_a can only shrink under a quantum channel.
//!
//! `cargo run --example channels`

use qsd::channel::KrausChannel;
use qsd::differential::differential_skew_divergence;
use qsd::divergence::{skew_divergence, SkewParameter};
use qsd::random::{random_cptp, random_state};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rho = random_state(3, &mut rng);
    let sigma = random_state(3, &mut rng);
    let al = SkewParameter::new(0.3)?;

    let channels = [
        ("random, 1 Kraus op", random_cptp(3, 1, &mut rng)),
        ("random, 3 Kraus ops", random_cptp(3, 3, &mut rng)),
        ("fully depolarizing", KrausChannel::fully_depolarizing(3)),
    ];
    println!(
        "before: SD {:.6}  D {:.6}",
        skew_divergence(&rho, &sigma, al)?,
        differential_skew_divergence(&rho, &sigma, 0.3)?
    );
    for (name, ch) in &channels {
        let (r, s) = (ch.apply(&rho)?, ch.apply(&sigma)?);
        println!(
            "{name:>20}: SD {:.6}  D {:.6}",
            skew_divergence(&r, &s, al)?,
            differential_skew_divergence(&r, &s, 0.3)?
        );
    }
    Ok(())
}
