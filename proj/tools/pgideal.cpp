#include <iostream>

#include <pgideal/cli.hpp>

int main(int argc, char** argv)
{
  return pgideal::cli::run(argc, argv, std::cout, std::cerr);
}
