//! Weyl group enumeration, dot action and minimal coset representatives.

use lieo::roots::RootSystem;
use lieo::weyl::WeylGroup;

fn main() -> lieo::Result<()> {
    let rs = RootSystem::from_type_str("B2")?;
    let w = WeylGroup::new(&rs)?;
    println!("B2: {} elements, lengths {:?}", w.order(), w.length_counts());
    println!("longest element {}", w.longest().word_string());

    let zero = rs.zero_weight();
    for x in w.elements() {
        println!("  {:<8} . 0 = {}", x.word_string(), x.dot(&rs, &zero)?);
    }

    // W^I for I = {alpha_1}
    let cosets = w.min_coset_reps(&[0])?;
    let reps: Vec<String> = cosets.reps.iter().map(|r| r.word_string()).collect();
    println!("minimal representatives modulo s1: {reps:?}");
    Ok(())
}
