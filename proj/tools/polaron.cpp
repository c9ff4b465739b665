#include "polaron/cli/run.hpp"

int main(int argc, char** argv) { return polaron::cli::run(argc, argv); }
