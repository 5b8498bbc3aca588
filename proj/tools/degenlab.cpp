#include "degenlab/cli.hpp"

int main(int argc, char** argv) { return degenlab::cli::run(argc, argv); }
