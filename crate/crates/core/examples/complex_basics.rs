//! Building complexes, face numbers, links and the facet-list format.

use srtk::builtin::builtin;
use srtk::io::{parse_facet_list, write_facet_list};
use srtk::{Face, SimplicialComplex};

fn main() -> srtk::Result<()> {
    let torus = builtin("torus7")?;
    println!("{torus}");
    println!("f-vector {:?}, pure: {}", torus.f_vector(), torus.is_pure());

    let v = Face::vertex(1);
    let link = torus.link(&v);
    println!("lk 1 has facets {:?}", link.facets().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("st 1 has {} facets, deletion of 1 has {}", torus.star(&v).facets().len(), torus.deletion(&v).facets().len());

    let square = SimplicialComplex::from_facets(4, [vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    let text = write_facet_list(&square);
    print!("{text}");
    assert_eq!(parse_facet_list(&text)?, square);
    Ok(())
}
