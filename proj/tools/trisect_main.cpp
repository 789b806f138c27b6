#include "trisect/cli.hpp"

int main(int argc, char** argv) { return trisect::cli::run(argc, argv); }
