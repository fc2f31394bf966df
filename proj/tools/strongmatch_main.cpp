#include "strongmatch/experiments.hpp"

int main(int argc, char** argv) { return strongmatch::cli_dispatch(argc, argv); }
