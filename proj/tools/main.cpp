#include <iostream>

#include "ba/cli_driver.hpp"

int main(int argc, char** argv) { return ba::cli::run(argc, argv, std::cout, std::cerr); }
