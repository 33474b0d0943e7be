#include "parastab/cli.hpp"

int main(int argc, char** argv) { return parastab::cli::main(argc, argv); }
