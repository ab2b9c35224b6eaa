// The built-in morphisms and applying them to words.

use std::error::Error;

use morphcheck::{parse_word, CatalogName, Morphism};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for name in CatalogName::ALL {
        let m = name.morphism();
        let n = m
            .uniformity()
            .map_or("non-uniform".to_string(), |n| format!("{n}-uniform"));
        println!("{name}: {} letters, {n}", m.source().len());
        for (c, img) in m.source().letters().iter().zip(m.images()) {
            println!("  {c} -> {img}");
        }
    }

    let mu = CatalogName::ThueMorse.morphism();
    let w = parse_word("011", mu.source())?;
    let image = mu.apply(&w)?;
    println!("mu(011) = {image}");
    assert_eq!(image.to_string(), "011010");

    let h = Morphism::from_strs("ab", "01", &["001", "11"])?;
    let w = parse_word("aba", h.source())?;
    assert_eq!(h.apply(&w)?.to_string(), "00111001");
    assert_eq!(h.uniformity(), None);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
