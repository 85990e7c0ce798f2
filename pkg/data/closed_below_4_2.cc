n=4
0000
0001
0010
0011
0100
0101
0110
1000
1001
1010
1100
