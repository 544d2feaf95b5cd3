#include "fuzzylens/cli.hpp"

int main(int argc, char** argv) { return fuzzylens::cli_main(argc, argv); }
