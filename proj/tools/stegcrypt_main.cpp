#include "stegcrypt/cli.hpp"

int main(int argc, char** argv) { return stegcrypt::cli::run(argc, argv); }
