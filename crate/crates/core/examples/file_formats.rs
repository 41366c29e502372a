//! Writing and reading the JSON state, ensemble and channel files used by
//! the `qsd` binary.
//!
//! `cargo run --example file_formats`

use qsd::ensemble::Ensemble;
use qsd::io::{parse_channel, parse_ensemble, parse_state, to_json_line, ChannelFile, EnsembleFile, StateFile};
use qsd::random::{random_cptp, random_state};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let rho = random_state(2, &mut rng);
    let text = to_json_line(&StateFile::from_operator(&rho));
    print!("state:    {text}");
    assert_eq!(parse_state(&text)?.matrix(), rho.matrix());

    let e = Ensemble::new(vec![0.5, 0.5], vec![rho.clone(), random_state(2, &mut rng)])?;
    let text = to_json_line(&EnsembleFile::from_ensemble(&e));
    print!("ensemble: {text}");
    assert_eq!(parse_ensemble(&text)?, e);

    let ch = random_cptp(2, 2, &mut rng);
    let text = to_json_line(&ChannelFile::from_channel(&ch));
    print!("channel:  {text}");
    println!("completeness defect after re-read: {:.1e}", parse_channel(&text)?.completeness_defect());
    Ok(())
}
