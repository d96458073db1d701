"""The stringalg command, driven from Python."""

from stringalg.cli import main

main(["check", "gp3.quiver"])
main(["strings", "kronecker.quiver", "--max-len", "3"])
main(["tensor", "gp3.quiver", "a a b^- a", "b^- a a b^- b^-"])
main(["tensor", "gp3.quiver", "a", "b", "--format", "records"])
main(["verify", "gp3.quiver", "--all", "--max-len", "3"])
