#include "pwsb/cli.hpp"

int main(int argc, char** argv) { return pwsb::run_cli(argc, argv); }
