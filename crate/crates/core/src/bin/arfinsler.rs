fn main() {
    // CLI wired up once the pipeline modules land
}
