#include "gsurf/cli.hpp"

int main(int argc, char** argv) { return gsurf::cli::main(argc, argv); }
