#include "ffint/cli.hpp"

int main(int argc, char** argv) { return ffint::cli::run(argc, argv); }
