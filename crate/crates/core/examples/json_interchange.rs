//! Writes catalog objects as interchange documents and parses them back.

use hksym::catalog::{build_named, CatalogObject, CatalogParams, CATALOG_NAMES};
use hksym::io::{document_to_json, parse_document, Document};
use hksym::quadext::build_extension;

fn main() -> hksym::Result<()> {
    for name in CATALOG_NAMES {
        let doc = match build_named(name, &CatalogParams::default())? {
            CatalogObject::Extension(x) => Document::Extension(x),
            CatalogObject::Quartic(s) => Document::Quartic(s),
        };
        let text = document_to_json(&doc);
        let back = parse_document(&text)?;
        println!("{name:>10}: {} bytes, round trip exact: {}", text.len(), back == doc);
    }
    let t = build_extension(&hksym::catalog::example1())?;
    let text = document_to_json(&Document::Triple(t));
    println!("example1 triple document: {} lines", text.lines().count());

    let bad = "{\n  \"scalar_field\": \"Q\",\n  \"n\": 1,\n  \"quartic\": [{\"monomial\": [\"p1\"], \"coef\": \"1\"}]\n}";
    println!("error: {}", parse_document(bad).unwrap_err());
    Ok(())
}
