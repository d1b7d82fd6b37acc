#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return poncelet::cli::RunCli(argc, argv, std::cout, std::cerr); }
