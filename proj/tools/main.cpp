#include "mcliff/cli.hpp"

int main(int argc, char** argv) { return mcliff::cli::run(argc, argv); }
