fn main() {
    // die quietly when a downstream pipe closes (e.g. `confspace ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(confspace::cli::dispatch(std::env::args()));
}
