#include "commands.hpp"

int main(int argc, char** argv) { return falsebottom::cli::run_cli(argc, argv); }
