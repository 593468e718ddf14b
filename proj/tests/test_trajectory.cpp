#include <doctest.h>
int d1;
