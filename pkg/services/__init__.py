# Services package: groups, subset products, group algebra, random walks
