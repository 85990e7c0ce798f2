n=7
0111000
0111001
0111010
0111100
1011000
1011001
1011010
1011100
1101000
1101001
1101010
1101100
1110000
1110001
1110010
1110100
1111000
1111001
1111010
1111100
