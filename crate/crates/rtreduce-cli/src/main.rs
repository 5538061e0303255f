fn main() {
    println!("rtreduce");
}
