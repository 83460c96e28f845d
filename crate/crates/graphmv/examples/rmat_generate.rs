//! Generate a scale-free RMAT graph, preprocess it, and write it out in
//! matrix-market form next to some degree statistics.

use graphmv::io::{generate_rmat, preprocess, write_matrix_market};

fn main() {
    let raw = generate_rmat(13, 16, 1).unwrap();
    let clean = preprocess(&raw, true);
    let a = clean.to_bool_matrix().unwrap();

    let mut degrees: Vec<usize> = (0..a.num_rows()).map(|i| a.out_degree(i)).collect();
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    println!(
        "sampled {} edges -> {} after de-dup/mirroring over {} vertices",
        raw.edges.len(),
        a.nnz(),
        a.num_rows()
    );
    println!("avg degree {:.1}, top degrees {:?}", a.avg_degree(), &degrees[..8]);
    println!("isolated vertices: {}", degrees.iter().filter(|&&d| d == 0).count());

    let out = std::env::temp_dir().join("rmat_scale13.mtx");
    write_matrix_market(&out, &clean).unwrap();
    println!("wrote {}", out.display());
}
