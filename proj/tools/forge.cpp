#include <forge/cli.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  return forge::dispatch( argc, argv, std::cout, std::cerr );
}
