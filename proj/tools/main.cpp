#include "wellscmp/cli.hpp"

int main(int argc, char** argv) { return wellscmp::run_cli(argc, argv); }
