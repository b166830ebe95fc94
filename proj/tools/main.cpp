#include "kurepa/cli.hpp"

int main(int argc, char** argv) { return kurepa::run_cli(argc, argv); }
