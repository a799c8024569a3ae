fn main() {
    println!("arctic");
}
