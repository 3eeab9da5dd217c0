b = {e for e in range(10)}
