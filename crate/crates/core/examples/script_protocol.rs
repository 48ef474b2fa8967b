//! Feed a text script through the protocol runner, as the `diskconn` binary
//! does with `--script` or stdin.

use disk_connectivity::cli::{Command, ScriptRunner};

const SCRIPT: &str = "\
# two separate disks, then a bridge
ADD 0 0 1
ADD 10 0 1
QUERY 0 1
COMPONENTS
ADD 5 0 4.2
QUERY 0 1
GEN tangent_chain 20 5
COMPONENTS
CHECK
STATS
QUERY 0 999
";

fn main() -> std::io::Result<()> {
    println!("{:?}", Command::parse("ADD 1.5 -2 0.25"));
    println!("{:?}", Command::parse("ADD 1.5"));
    println!("{:?}\n", Command::parse("  # comment"));

    let mut out = Vec::new();
    let code = ScriptRunner::new().run(SCRIPT.as_bytes(), &mut out)?;
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
    Ok(())
}
