def map_coords(n):
    return (n, 0)
