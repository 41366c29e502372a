//! Entropy production when two states evolve under different Hamiltonians.
//!
//! `cargo run --example mixing`

use qsd::ensemble::{mixing_rate, sim_bound_check, Ensemble, MixingExperiment};
use qsd::random::{random_hamiltonian, random_state};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let e = Ensemble::new(vec![0.2, 0.8], vec![random_state(3, &mut rng), random_state(3, &mut rng)])?;
    let h1 = random_hamiltonian(3, &mut rng);
    let h2 = random_hamiltonian(3, &mut rng);

    println!("{:>5} {:>12} {:>12} {:>12}", "t", "gain", "bound", "rate");
    for t in [0.01, 0.05, 0.1, 0.5, 1.0] {
        let m = MixingExperiment::binary(e.clone(), h1.clone(), h2.clone(), t)?;
        let rec = sim_bound_check(&m)?;
        println!("{t:>5} {:>12.8} {:>12.8} {:>12.8}", rec.entropy_gain, rec.sim_bound, mixing_rate(&m)?);
    }

    let m = MixingExperiment::binary(e, h1, h2, 0.5)?;
    let rec = sim_bound_check(&m)?;
    println!(
        "\ngain rebuilt from skew divergences: {:.12} (residual {:.1e})",
        rec.sd_representation, rec.sd_representation_residual
    );
    for u in rec.unitary_perturbations {
        println!("alpha {:.2}: SD increase {:.6} <= {:.6}", u.alpha, u.lhs, u.rhs);
    }
    Ok(())
}
