#include "alia/cli.hpp"

int main(int argc, char** argv) { return alia::cli_main(argc, argv); }
