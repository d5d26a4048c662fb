"""Published reference values."""

# c[n][p] for n = 0..14: Motzkin paths of length n with p UHD plateaus
PUBLISHED_COUNTS = (
    (1,),
    (1,),
    (2,),
    (3, 1),
    (7, 2),
    (15, 6),
    (36, 14, 1),
    (85, 39, 3),
    (209, 102, 12),
    (517, 280, 37, 1),
    (1303, 758, 123, 4),
    (3312, 2085, 381, 20),
    (8510, 5730, 1194, 76, 1),
    (22029, 15849, 3657, 295, 5),
    (57447, 43914, 11187, 1056, 30),
)
