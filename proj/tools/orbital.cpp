#include "orbital/cli.hpp"

int main(int argc, char** argv) { return orbital::cli::run_cli(argc, argv); }
