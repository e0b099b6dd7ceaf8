def browse_category_by_navigation(menu_id_sequence: list):
   """Browse products by navigating through a sequence of menu IDs.
   This function allows navigation through a series of menu interactions.
   Args:
       menu_id_sequence (list): A list of menu IDs to interact sequentially, using hover actions followed by a click.


   Example usage:
       browse_category_by_navigation(['735', '786', '797']) # Navigates Home & Kitchen -> Storage & Organization -> Racks, Shelves & Drawers
   """
   for idx, menu_id in enumerate(menu_id_sequence[:-1]):
       hover(menu_id)
   click(menu_id_sequence[-1])  # Click the final id to land in the predefined category
