#include "swc/cli.hpp"

int main(int argc, char** argv) { return swc::cli::run(argc, argv); }
