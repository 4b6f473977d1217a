//! Union, intersection, projection and star of semilinear sets.

use ggdec::letter::Letter;
use ggdec::semilinear::{CoordSpace, SemilinearSet, VectorN};

fn main() {
    let space = CoordSpace::canonical([Letter::gen("x"), Letter::gen("y")]);
    let v = |x, y| VectorN::new(space.clone(), vec![x, y]).unwrap();

    // {(n, 2n)} and {(1, 0) + m (1, 1)}
    let doubled = SemilinearSet::linear(&v(0, 0), &[v(1, 2)]).unwrap();
    let diagonal = SemilinearSet::linear(&v(1, 0), &[v(1, 1)]).unwrap();

    println!("doubled:\n{}", doubled.render());
    println!("diagonal:\n{}", diagonal.render());
    println!("union:\n{}", doubled.union(&diagonal).unwrap().render());
    println!("intersection:\n{}", doubled.intersect(&diagonal).unwrap().render());
    println!("x-projection of diagonal:\n{}", diagonal.project(&[Letter::gen("x")]).unwrap().render());
    println!("star of diagonal:\n{}", diagonal.star().render());
    println!("x = y within doubled:\n{}", doubled.constrain_equal(&Letter::gen("x"), &Letter::gen("y")).unwrap().render());
}
