#include "exlag_cli.hpp"

int main(int argc, char** argv) { return exlag::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
