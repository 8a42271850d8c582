//! Every independent route to `⟨A⟩/p` and `RGF_p`, run against each other on
//! seeded random instances. `nsq verify --random N --seed S` does the same.

use nsq::cli::{random_instance, verify_instance, CheckStatus};
use nsq::Limits;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nsq::Result<()> {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut pass, mut skip, mut fail) = (0, 0, 0);
    for _ in 0..25 {
        let q = random_instance(&mut rng, 30, 5);
        for c in verify_instance(&q, &limits)? {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Skip(_) => skip += 1,
                CheckStatus::Fail(why) => {
                    fail += 1;
                    println!("A = {:?}, p = {}: {} failed: {why}", q.gens().original(), q.p(), c.name);
                }
            }
        }
    }
    println!("{pass} passed, {skip} skipped, {fail} failed");
    Ok(())
}
