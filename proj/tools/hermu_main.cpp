#include "hermu/cli.hpp"

int main(int argc, char** argv) { return hermu::cli::main(argc, argv); }
