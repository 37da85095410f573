//! Equal products from two disjoint blocks of consecutive integers.

use dickson_pte::blocks::{census, search, DivClass};

fn main() -> dickson_pte::Result<()> {
    let found = search(3, 20, 2, 3)?;
    for i in &found {
        println!("{:?} = {:?} = {} ({})", i.chosen_a, i.chosen_b, i.product, i.class.label());
    }

    let sporadic: Vec<_> = search(4, 100, 3, 4)?.into_iter().filter(|i| i.class == DivClass::KNotDiv2L).collect();
    println!("{}", serde_json::to_string_pretty(&census(&sporadic)).unwrap());
    Ok(())
}
