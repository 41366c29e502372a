//! Holevo information of a random ensemble, computed three ways, with its
//! upper bounds and a continuity estimate.
//!
//! `cargo run --example holevo`

use qsd::ensemble::{
    chi_continuity_bound, chi_upper_bounds, holevo_chi, holevo_chi_relative_entropy_form, holevo_chi_skew_form,
    Ensemble,
};
use qsd::hermitian::DensityMatrix;
use qsd::random::{random_state, random_weights};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let states: Vec<DensityMatrix> = (0..3).map(|_| random_state(4, &mut rng)).collect();
    let e = Ensemble::new(random_weights(3, &mut rng), states.clone())?;

    println!("chi, entropy form          {:.12}", holevo_chi(&e));
    println!("chi, relative-entropy form {:.12}", holevo_chi_relative_entropy_form(&e)?);
    println!("chi, skew-divergence form  {:.12}", holevo_chi_skew_form(&e)?);

    let b = chi_upper_bounds(&e)?;
    println!(
        "\nchi {:.6} <= {:.6} <= {:.6} <= {:.6}",
        b.chi, b.complementary_bound, b.pairwise_bound, b.entropy_times_t
    );

    let pair = Ensemble::new(vec![0.3, 0.7], states[..2].to_vec())?;
    let pb = chi_upper_bounds(&pair)?;
    if let (Some(roga), Some(alt)) = (pb.roga_bound, pb.entropy_times_fidelity_distance) {
        println!("binary: chi {:.6} <= S(sigma_F) {roga:.6} <= H(p) sqrt(1 - F^2) {alt:.6}", pb.chi);
    }

    // move every member a little toward the maximally mixed state
    let moved = e
        .states()
        .iter()
        .map(|r| DensityMatrix::new(&r.scale(0.9) + &DensityMatrix::maximally_mixed(4).scale(0.1)))
        .collect::<qsd::Result<Vec<_>>>()?;
    let f = Ensemble::new(e.weights().to_vec(), moved)?;
    let c = chi_continuity_bound(&e, &f)?;
    println!(
        "\n|chi(E) - chi(E')| = {:.6} <= {:.6} <= {:.6}  (t = {:.4})",
        c.delta_chi, c.weighted_bound, c.dimension_free_bound, c.t
    );
    Ok(())
}
