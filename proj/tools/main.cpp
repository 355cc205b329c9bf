#include "cli.hpp"

int main(int argc, char** argv) { return co2lab::cli::run(argc, argv); }
